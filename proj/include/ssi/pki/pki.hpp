#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssi/core/clock.hpp"
#include "ssi/core/json_codec.hpp"
#include "ssi/identity/crypto.hpp"

namespace ssi {

/// Certificate signing request. The proof of possession is the subject's
/// signature over (subject_name, subject_public_key).
struct Csr {
  std::string subject_name;
  VerifyKey subject_public_key;
  Signature proof_of_possession;

  Bytes possession_payload() const;
};

Csr make_csr(std::string subject_name, const KeyPair& subject);

struct Certificate {
  std::uint64_t serial = 0;
  std::string subject_name;
  VerifyKey subject_public_key;
  std::string issuer_name;
  std::uint64_t not_before = 0;
  std::uint64_t not_after = 0;
  Signature issuer_signature;

  Bytes signing_payload() const;
  Hash256 fingerprint() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

json::Json to_json(const Certificate& cert);

struct CaNode {
  std::string name;
  KeyPair keys;
  Certificate cert;
};

enum class CertStatus { Valid, Revoked };

struct VaRecord {
  CertStatus status = CertStatus::Valid;
  Hash256 fingerprint;
};

enum class CertFault { ChainBroken, Expired, UnknownSerial, Revoked };

std::string_view to_string(CertFault fault) noexcept;

struct CertVerdict {
  std::optional<CertFault> fault;
  bool valid() const noexcept { return !fault.has_value(); }
};

enum class DuplicateSubjectPolicy { Allow, Reject };

struct PkiOptions {
  std::string root_name = "root-ca";
  std::string subordinate_name = "issuing-ca";
  std::uint64_t ca_lifetime = 1'000'000;
  std::uint64_t leaf_lifetime = 10'000;
  DuplicateSubjectPolicy duplicate_subjects = DuplicateSubjectPolicy::Allow;
};

struct Approval {
  std::uint64_t approval_id = 0;
  std::uint64_t request_id = 0;
};

/// One line of the certificate flow: RA intake through VA verdict.
struct PkiLogEntry {
  int step = 0;
  std::string from;
  std::string to;
  std::string action;
};

/// Root CA, one subordinate issuing CA, an RA queue and the VA database.
/// Every certificate either CA issues is recorded in the VA.
class CaHierarchy {
 public:
  static CaHierarchy create(const Seed& seed, LogicalClock& clock, PkiOptions options = {});

  /// Throws BadProofOfPossession.
  std::uint64_t submit_csr(const Csr& csr);

  /// Throws UnknownRequest, AlreadyApproved, or DuplicateSubject when the
  /// policy forbids a second certificate for one subject name.
  Approval ra_approve(std::uint64_t request_id);

  /// Issued by the subordinate CA. Throws UnknownApproval, including for an
  /// approval that was already used.
  Certificate ca_issue(const Approval& approval, LogicalClock& clock);

  /// Issuance by the named CA with no RA involvement, as an operator (or
  /// anyone holding the CA's key and systems) can do. Throws UnknownRequest
  /// for a CA name outside the hierarchy.
  Certificate issue_as(const std::string& ca_name, const std::string& subject_name,
                       const VerifyKey& subject_key, LogicalClock& clock);

  /// VA status flip. Throws UnknownCredential for an unknown serial.
  void revoke(std::uint64_t serial);

  CertVerdict verify_certificate(const Certificate& cert, const LogicalClock& clock) const;

  /// Relying-party path: presentation to the server, VA query, verdict.
  /// Same result as verify_certificate, and appends the flow to log().
  CertVerdict relying_party_check(const Certificate& cert, const LogicalClock& clock);

  const CaNode& root() const noexcept { return root_; }
  const std::vector<CaNode>& subordinates() const noexcept { return subordinates_; }
  const std::map<std::uint64_t, VaRecord>& va() const noexcept { return va_; }
  std::optional<CertStatus> va_status(std::uint64_t serial) const;
  const std::vector<PkiLogEntry>& log() const noexcept { return log_; }

  /// Trust anchors a relying party accepts. Removing the root invalidates
  /// every certificate.
  void distrust_root() { trusted_roots_.clear(); }
  void trust_root(const VerifyKey& key) { trusted_roots_.push_back(key); }

 private:
  CaHierarchy() = default;

  const CaNode* find_ca(const std::string& name) const;
  Certificate sign_certificate(const CaNode& issuer, std::string subject_name,
                               const VerifyKey& subject_key, std::uint64_t not_before,
                               std::uint64_t lifetime);
  bool chain_ok(const Certificate& cert, const LogicalClock& clock, CertFault& fault) const;
  bool subject_issued(const std::string& subject_name) const;

  PkiOptions options_;
  CaNode root_;
  std::vector<CaNode> subordinates_;
  std::vector<VerifyKey> trusted_roots_;
  std::map<std::uint64_t, Csr> requests_;
  std::map<std::uint64_t, Approval> approvals_;
  std::map<std::uint64_t, bool> approved_requests_;
  std::map<std::uint64_t, VaRecord> va_;
  std::vector<std::string> issued_subjects_;
  std::vector<PkiLogEntry> log_;
  std::uint64_t next_serial_ = 1;
  std::uint64_t next_request_ = 1;
  std::uint64_t next_approval_ = 1;
};

}  // namespace ssi
