#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssi/core/random.hpp"
#include "ssi/credential/credential.hpp"
#include "ssi/credential/presentation.hpp"
#include "ssi/ledger/ledger.hpp"

namespace ssi {

enum class Check {
  SchemaKnown,
  ChallengeMatch,
  MerkleProofs,
  IssuerSignature,
  HolderSignature,
  StatusActive,
};

std::string_view to_string(Check check) noexcept;

struct CheckResult {
  Check check;
  bool passed;
};

/// Accept iff every listed check passed. When rejecting, the cause is the
/// first failing check in list order.
struct VerificationReport {
  std::vector<CheckResult> checks;

  bool accepted() const;
  std::optional<Check> reject_cause() const;
  /// nullopt when the check was not part of this verification.
  std::optional<bool> passed(Check check) const;
};

json::Json to_json(const VerificationReport& report);

/// Anchors a schema through `session`. Throws UnknownDid,
/// DuplicateAttribute or DuplicateSchema.
CredentialSchema define_schema(const Identity& issuer, std::string name, std::uint64_t version,
                               std::vector<std::string> attribute_names, LedgerSession& session);

/// Issues with fresh salts and anchors only the commitment root. `values`
/// may come in any order but must name every schema attribute once.
/// Throws UnknownDid, NotSchemaOwner, UnknownSchema or SchemaMismatch.
Credential issue_credential(const Identity& issuer, const Did& holder_did,
                            const CredentialSchema& schema, const std::vector<Attribute>& values,
                            LedgerSession& session, RandomSource& rng);

/// Throws UnknownAttribute or WrongHolderKey.
Presentation create_presentation(const Credential& credential,
                                 const std::set<std::string>& reveal, const Challenge& challenge,
                                 const KeyPair& holder);

VerificationReport verify_presentation(const RegistryView& registry,
                                       const Presentation& presentation,
                                       const Challenge& expected_challenge);

/// Registry-backed check of a full credential: schema, commitments,
/// issuer signature and status.
VerificationReport verify_credential(const RegistryView& registry, const Credential& credential);

/// Throws UnknownCredential, NotIssuer or AlreadyRevoked.
void revoke_credential(const Identity& issuer, const Hash256& credential_id,
                       LedgerSession& session);

/// Commitment root, credential id and issuer signature all recompute.
bool tamper_check(const Credential& credential, const VerifyKey& issuer_key);
bool tamper_check(const Credential& credential, const RegistryView& registry);

}  // namespace ssi
