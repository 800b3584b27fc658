#include "ssi/core/random.hpp"

#include <sodium.h>

#include "ssi/core/canonical.hpp"

namespace ssi {

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::array<std::uint8_t, 8> raw{};
    fill(raw);
    std::uint64_t value = 0;
    for (auto b : raw) value = (value << 8) | b;
    if (value < limit) return value % bound;
  }
}

void SystemRandom::fill(std::span<std::uint8_t> out) {
  if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
  randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(const Seed& seed) : seed_(seed.bytes) {}

SeededRandom::SeededRandom(std::uint64_t seed) {
  Bytes encoded = CanonicalWriter("ssi/seeded-random/v1").u64(seed).data();
  crypto_hash_sha256(seed_.data(), encoded.data(), encoded.size());
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  Bytes material(seed_.begin(), seed_.end());
  CanonicalWriter counter;
  counter.u64(counter_++);
  material.insert(material.end(), counter.data().begin(), counter.data().end());

  std::array<std::uint8_t, randombytes_SEEDBYTES> block_seed{};
  crypto_hash_sha256(block_seed.data(), material.data(), material.size());
  randombytes_buf_deterministic(out.data(), out.size(), block_seed.data());
}

}  // namespace ssi
