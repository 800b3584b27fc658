#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "ssi/core/json_codec.hpp"
#include "ssi/identity/crypto.hpp"

namespace ssi {

/// `did:sim:<base58(SHA-256(verification key))>`.
class Did {
 public:
  static constexpr std::string_view kMethod = "sim";
  static constexpr std::string_view kPrefix = "did:sim:";

  /// Throws ErrorCode::InvalidDid unless `text` is a canonical did:sim
  /// string whose identifier decodes to exactly 32 bytes.
  static Did parse(std::string_view text);

  const std::string& identifier() const noexcept { return identifier_; }
  std::string str() const { return std::string(kPrefix) + identifier_; }

  friend bool operator==(const Did&, const Did&) = default;
  friend auto operator<=>(const Did&, const Did&) = default;

 private:
  friend Did derive_did(const VerifyKey& public_key);
  explicit Did(std::string identifier) : identifier_(std::move(identifier)) {}

  std::string identifier_;
};

Did derive_did(const VerifyKey& public_key);

/// Reads a DID-valued string field; any defect is a ParseError.
Did get_did(const json::Json& object, std::string_view key);

/// A key pair together with the DID derived from it.
struct Identity {
  KeyPair keys;
  Did did;

  static Identity from_seed(const Seed& seed);
  static Identity from_keys(KeyPair keys);
};

}  // namespace ssi
