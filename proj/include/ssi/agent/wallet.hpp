#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssi/credential/credential.hpp"
#include "ssi/identity/did.hpp"

namespace ssi {

/// Opaque labelled blob (tokens, currency handles, other personal data).
struct OtherData {
  std::string label;
  Bytes blob;

  friend bool operator==(const OtherData&, const OtherData&) = default;
};

/// Holds a DID, its key material, credentials and opaque other data.
class Wallet {
 public:
  static Wallet create(const Seed& seed);

  const Did& did() const noexcept { return identity_.did; }
  const KeyPair& keypair() const noexcept { return identity_.keys; }
  const Identity& identity() const noexcept { return identity_; }

  const std::vector<Credential>& credentials() const noexcept { return credentials_; }
  const std::vector<OtherData>& other_data() const noexcept { return other_data_; }

  /// Throws WrongHolderKey if the credential is held by another DID and
  /// CorruptCredential if its commitments do not recompute.
  void add_credential(Credential credential);
  std::optional<Credential> find_credential(const Hash256& credential_id) const;

  void add_other_data(std::string label, Bytes blob);

 private:
  explicit Wallet(Identity identity) : identity_(std::move(identity)) {}
  friend Wallet wallet_load(std::string_view text);

  Identity identity_;
  std::vector<Credential> credentials_;
  std::vector<OtherData> other_data_;
};

/// wallet.json in canonical form; contains the private seed.
std::string wallet_save(const Wallet& wallet);

/// Throws ParseError on malformed input, KeyMismatch if the stored DID or
/// public keys do not derive from the stored seed, CorruptCredential for a
/// credential that fails its commitment check or belongs to another DID.
Wallet wallet_load(std::string_view text);

}  // namespace ssi
