#pragma once

#include <map>
#include <optional>

#include "ssi/ledger/transaction.hpp"

namespace ssi {

enum class CredentialStatus { Unknown, Active, Revoked };

std::string_view to_string(CredentialStatus status) noexcept;

struct AnchorRecord {
  Did issuer_did;
  Hash256 commitment_root;
  bool revoked = false;
};

/// Registry contents obtained by replaying every transaction in order.
/// apply() enforces the admission rules shared by append and validation:
///
///  - RegisterDid: the document is self-consistent and the submitter
///    signature verifies under the document's own key. A re-registration
///    must keep the verification key and carry a strictly newer
///    created_at (latest wins, replays are stale).
///  - every other transaction: the acting DID is registered and the
///    submitter signature verifies under its current verification key.
///  - DefineSchema: well-formed and not yet defined.
///  - AnchorCredential: credential id not yet anchored.
///  - Revoke: anchored, by the anchoring issuer, not yet revoked.
///
/// Violations throw Error with a code naming the broken rule; the state
/// is left untouched.
class RegistryState {
 public:
  void check(const RegistryTransaction& tx) const;
  void apply(const RegistryTransaction& tx);

  const DidDocument* find_did(const Did& did) const;
  const CredentialSchema* find_schema(const Hash256& schema_id) const;
  const AnchorRecord* find_anchor(const Hash256& credential_id) const;
  CredentialStatus credential_status(const Hash256& credential_id) const;

 private:
  void verify_submitter(const RegistryTransaction& tx) const;

  std::map<Did, DidDocument> dids_;
  std::map<Hash256, CredentialSchema> schemas_;
  std::map<Hash256, AnchorRecord> anchors_;
};

}  // namespace ssi
