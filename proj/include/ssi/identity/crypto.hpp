#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ssi/core/bytes.hpp"
#include "ssi/core/random.hpp"

namespace ssi {

using VerifyKey = FixedBytes<32, struct VerifyKeyTag>;
using AgreementKey = FixedBytes<32, struct AgreementKeyTag>;
using Signature = FixedBytes<64, struct SignatureTag>;
using EnvelopeNonce = FixedBytes<24, struct EnvelopeNonceTag>;

Hash256 sha256(ByteView data);

/// SHA-256 over the concatenation of the given parts.
Hash256 sha256_concat(std::initializer_list<ByteView> parts);

/// First 8 bytes of SHA-256(public_key), lowercase hex.
std::string key_fingerprint(ByteView public_key);

struct KeyPair;

/// Secret half of a key pair. Wiped on destruction.
class SecretKey {
 public:
  SecretKey() = default;
  SecretKey(const SecretKey&) = default;
  SecretKey& operator=(const SecretKey&) = default;
  ~SecretKey();

  const Seed& seed() const noexcept { return seed_; }
  ByteView signing_key() const noexcept { return signing_; }
  ByteView agreement_key() const noexcept { return agreement_; }

 private:
  friend KeyPair generate_keypair(ByteView seed);

  Seed seed_;
  std::array<std::uint8_t, 64> signing_{};
  std::array<std::uint8_t, 32> agreement_{};
};

/// Ed25519 signing key plus an X25519 key-agreement key, both derived
/// from one 32-byte seed. The agreement seed is SHA-256 of the signing
/// seed under a separate domain tag.
struct KeyPair {
  VerifyKey public_key;
  AgreementKey agreement_public_key;
  SecretKey private_key;
  std::string key_id;
};

/// Throws ErrorCode::SeedLength unless `seed` is exactly 32 bytes.
KeyPair generate_keypair(ByteView seed);
KeyPair generate_keypair(const Seed& seed);

Signature sign(const SecretKey& key, ByteView message);

/// False on any malformed input; never throws.
bool verify(const VerifyKey& key, ByteView message, ByteView signature);
bool verify(const VerifyKey& key, ByteView message, const Signature& signature);

/// Authenticated public-key ciphertext (X25519 + XSalsa20-Poly1305).
/// Key ids are fingerprints of the two agreement keys.
struct Envelope {
  std::string sender_key_id;
  std::string recipient_key_id;
  EnvelopeNonce nonce;
  Bytes ciphertext;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

Envelope encrypt_for(const AgreementKey& recipient_public, const KeyPair& sender,
                     ByteView plaintext, RandomSource& rng);

/// Throws ErrorCode::AuthFailure on the wrong key pair, key ids that do not
/// name these two keys, or any tampering.
Bytes decrypt(const KeyPair& recipient, const AgreementKey& sender_public,
              const Envelope& envelope);

/// Binary wire form of an envelope (canonical encoding of its fields).
Bytes serialize_envelope(const Envelope& envelope);
Envelope parse_envelope(ByteView wire);

}  // namespace ssi
