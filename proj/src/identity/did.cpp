#include "ssi/identity/did.hpp"

namespace ssi {

Did Did::parse(std::string_view text) {
  if (!text.starts_with(kPrefix)) {
    throw Error(ErrorCode::InvalidDid, "missing did:sim: prefix in '" + std::string(text) + "'");
  }
  std::string_view identifier = text.substr(kPrefix.size());
  Bytes decoded;
  try {
    decoded = from_base58(identifier);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidDid, "identifier is not base58: '" + std::string(text) + "'");
  }
  if (decoded.size() != 32) {
    throw Error(ErrorCode::InvalidDid, "identifier must decode to 32 bytes");
  }
  // Reject alternative spellings of the same 32 bytes.
  if (to_base58(decoded) != identifier) {
    throw Error(ErrorCode::InvalidDid, "non-canonical identifier encoding");
  }
  return Did(std::string(identifier));
}

Did derive_did(const VerifyKey& public_key) {
  return Did(to_base58(sha256(public_key.view()).view()));
}

Did get_did(const json::Json& object, std::string_view key) {
  std::string text = json::get_string(object, key);
  try {
    return Did::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "': " + e.what());
  }
}

Identity Identity::from_seed(const Seed& seed) { return from_keys(generate_keypair(seed)); }

Identity Identity::from_keys(KeyPair keys) {
  Did did = derive_did(keys.public_key);
  return Identity{std::move(keys), std::move(did)};
}

}  // namespace ssi
