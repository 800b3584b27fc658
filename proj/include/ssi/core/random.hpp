#pragma once

#include <cstdint>
#include <span>

#include "ssi/core/bytes.hpp"

namespace ssi {

using Seed = FixedBytes<32, struct SeedTag>;

/// Source of nonces, salts and seeds. Operations that need randomness take
/// one by reference so callers choose between OS entropy and a seeded,
/// reproducible stream.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  template <class Fixed>
  Fixed draw() {
    Fixed value;
    fill(value.bytes);
    return value;
  }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound);
};

class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic stream: block i is ChaCha20 keyed by SHA-256(seed || i).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(const Seed& seed);
  explicit SeededRandom(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  std::array<std::uint8_t, 32> seed_{};
  std::uint64_t counter_ = 0;
};

}  // namespace ssi
