#include "ssi/identity/crypto.hpp"

#include <sodium.h>

#include "ssi/core/canonical.hpp"

namespace ssi {
namespace {

constexpr std::string_view kAgreementSeedTag = "ssi/key-agreement-seed/v1";
constexpr std::string_view kEnvelopeTag = "ssi/envelope/v1";

void ensure_sodium() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

Hash256 sha256(ByteView data) {
  Hash256 out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Hash256 sha256_concat(std::initializer_list<ByteView> parts) {
  crypto_hash_sha256_state state;
  crypto_hash_sha256_init(&state);
  for (ByteView part : parts) crypto_hash_sha256_update(&state, part.data(), part.size());
  Hash256 out;
  crypto_hash_sha256_final(&state, out.data());
  return out;
}

std::string key_fingerprint(ByteView public_key) {
  Hash256 digest = sha256(public_key);
  return to_hex(digest.view().first(8));
}

SecretKey::~SecretKey() {
  sodium_memzero(seed_.data(), seed_.size());
  sodium_memzero(signing_.data(), signing_.size());
  sodium_memzero(agreement_.data(), agreement_.size());
}

KeyPair generate_keypair(ByteView seed) {
  if (seed.size() != crypto_sign_SEEDBYTES) {
    throw Error(ErrorCode::SeedLength,
                "seed must be 32 bytes, got " + std::to_string(seed.size()));
  }
  ensure_sodium();

  KeyPair pair;
  pair.private_key.seed_ = Seed::from(seed);
  crypto_sign_seed_keypair(pair.public_key.data(), pair.private_key.signing_.data(), seed.data());

  Bytes material = CanonicalWriter(kAgreementSeedTag).bytes(seed).data();
  Hash256 agreement_seed = sha256(material);
  crypto_box_seed_keypair(pair.agreement_public_key.data(), pair.private_key.agreement_.data(),
                          agreement_seed.data());
  sodium_memzero(material.data(), material.size());
  sodium_memzero(agreement_seed.data(), agreement_seed.size());

  pair.key_id = key_fingerprint(pair.public_key.view());
  return pair;
}

KeyPair generate_keypair(const Seed& seed) { return generate_keypair(seed.view()); }

Signature sign(const SecretKey& key, ByteView message) {
  ensure_sodium();
  Signature sig;
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                       key.signing_key().data());
  return sig;
}

bool verify(const VerifyKey& key, ByteView message, ByteView signature) {
  if (signature.size() != crypto_sign_BYTES) return false;
  ensure_sodium();
  return crypto_sign_verify_detached(signature.data(), message.data(), message.size(),
                                     key.data()) == 0;
}

bool verify(const VerifyKey& key, ByteView message, const Signature& signature) {
  return verify(key, message, signature.view());
}

Envelope encrypt_for(const AgreementKey& recipient_public, const KeyPair& sender,
                     ByteView plaintext, RandomSource& rng) {
  ensure_sodium();
  Envelope env;
  env.sender_key_id = key_fingerprint(sender.agreement_public_key.view());
  env.recipient_key_id = key_fingerprint(recipient_public.view());
  env.nonce = rng.draw<EnvelopeNonce>();
  env.ciphertext.resize(plaintext.size() + crypto_box_MACBYTES);
  if (crypto_box_easy(env.ciphertext.data(), plaintext.data(), plaintext.size(), env.nonce.data(),
                      recipient_public.data(), sender.private_key.agreement_key().data()) != 0) {
    throw Error(ErrorCode::AuthFailure, "key agreement failed (degenerate public key)");
  }
  return env;
}

Bytes decrypt(const KeyPair& recipient, const AgreementKey& sender_public,
              const Envelope& envelope) {
  ensure_sodium();
  // The shared secret is symmetric, so without this the sender could open
  // its own envelope by posing as the recipient.
  if (envelope.recipient_key_id != key_fingerprint(recipient.agreement_public_key.view()) ||
      envelope.sender_key_id != key_fingerprint(sender_public.view())) {
    throw Error(ErrorCode::AuthFailure, "envelope is not addressed between these keys");
  }
  if (envelope.ciphertext.size() < crypto_box_MACBYTES) {
    throw Error(ErrorCode::AuthFailure, "ciphertext shorter than authenticator");
  }
  Bytes plaintext(envelope.ciphertext.size() - crypto_box_MACBYTES);
  if (crypto_box_open_easy(plaintext.data(), envelope.ciphertext.data(),
                           envelope.ciphertext.size(), envelope.nonce.data(), sender_public.data(),
                           recipient.private_key.agreement_key().data()) != 0) {
    throw Error(ErrorCode::AuthFailure, "envelope failed authentication");
  }
  return plaintext;
}

Bytes serialize_envelope(const Envelope& envelope) {
  return CanonicalWriter(kEnvelopeTag)
      .text(envelope.sender_key_id)
      .text(envelope.recipient_key_id)
      .fixed(envelope.nonce)
      .bytes(envelope.ciphertext)
      .take();
}

Envelope parse_envelope(ByteView wire) {
  CanonicalReader reader(wire);
  reader.expect_tag(kEnvelopeTag);
  Envelope env;
  env.sender_key_id = reader.text();
  env.recipient_key_id = reader.text();
  env.nonce = reader.fixed<EnvelopeNonce>();
  env.ciphertext = reader.bytes();
  reader.expect_end();
  return env;
}

}  // namespace ssi
