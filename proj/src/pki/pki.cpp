#include "ssi/pki/pki.hpp"

#include <algorithm>

#include "ssi/core/canonical.hpp"
#include "ssi/core/error.hpp"

namespace ssi {

Bytes Csr::possession_payload() const {
  return CanonicalWriter("ssi/pki-csr/v1").text(subject_name).fixed(subject_public_key).take();
}

Csr make_csr(std::string subject_name, const KeyPair& subject) {
  Csr csr{std::move(subject_name), subject.public_key, {}};
  csr.proof_of_possession = sign(subject.private_key, csr.possession_payload());
  return csr;
}

Bytes Certificate::signing_payload() const {
  return CanonicalWriter("ssi/pki-certificate/v1")
      .u64(serial)
      .text(subject_name)
      .fixed(subject_public_key)
      .text(issuer_name)
      .u64(not_before)
      .u64(not_after)
      .take();
}

Hash256 Certificate::fingerprint() const {
  Bytes all = signing_payload();
  all.insert(all.end(), issuer_signature.bytes.begin(), issuer_signature.bytes.end());
  return sha256(all);
}

json::Json to_json(const Certificate& cert) {
  return {{"serial", cert.serial},
          {"subject_name", cert.subject_name},
          {"subject_public_key", to_hex(cert.subject_public_key)},
          {"issuer_name", cert.issuer_name},
          {"not_before", cert.not_before},
          {"not_after", cert.not_after},
          {"issuer_signature", to_hex(cert.issuer_signature)}};
}

std::string_view to_string(CertFault fault) noexcept {
  switch (fault) {
    case CertFault::ChainBroken: return "chain_broken";
    case CertFault::Expired: return "expired";
    case CertFault::UnknownSerial: return "unknown_serial";
    case CertFault::Revoked: return "revoked";
  }
  return "unknown";
}

CaHierarchy CaHierarchy::create(const Seed& seed, LogicalClock& clock, PkiOptions options) {
  if (options.root_name == options.subordinate_name) {
    throw Error(ErrorCode::BadConfig, "root and subordinate CA names must differ");
  }
  auto derive = [&](std::string_view role) {
    return generate_keypair(sha256(CanonicalWriter("ssi/pki-ca-seed/v1").fixed(seed).text(role).data()).view());
  };

  CaHierarchy h;
  h.options_ = std::move(options);
  std::uint64_t now = clock.tick();

  h.root_.name = h.options_.root_name;
  h.root_.keys = derive("root");
  h.root_.cert = h.sign_certificate(h.root_, h.root_.name, h.root_.keys.public_key, now,
                                    h.options_.ca_lifetime);
  h.trusted_roots_.push_back(h.root_.keys.public_key);

  CaNode sub;
  sub.name = h.options_.subordinate_name;
  sub.keys = derive("subordinate");
  sub.cert = h.sign_certificate(h.root_, sub.name, sub.keys.public_key, now,
                                h.options_.ca_lifetime);
  h.subordinates_.push_back(std::move(sub));
  return h;
}

Certificate CaHierarchy::sign_certificate(const CaNode& issuer, std::string subject_name,
                                          const VerifyKey& subject_key, std::uint64_t not_before,
                                          std::uint64_t lifetime) {
  Certificate cert{
      .serial = next_serial_++,
      .subject_name = std::move(subject_name),
      .subject_public_key = subject_key,
      .issuer_name = issuer.name,
      .not_before = not_before,
      .not_after = not_before + lifetime,
      .issuer_signature = {},
  };
  cert.issuer_signature = sign(issuer.keys.private_key, cert.signing_payload());
  va_[cert.serial] = VaRecord{CertStatus::Valid, cert.fingerprint()};
  issued_subjects_.push_back(cert.subject_name);
  return cert;
}

std::uint64_t CaHierarchy::submit_csr(const Csr& csr) {
  if (!verify(csr.subject_public_key, csr.possession_payload(), csr.proof_of_possession)) {
    throw Error(ErrorCode::BadProofOfPossession, "CSR for '" + csr.subject_name + "'");
  }
  std::uint64_t id = next_request_++;
  requests_.emplace(id, csr);
  log_.push_back({1, csr.subject_name, "ra", "submit-csr"});
  return id;
}

bool CaHierarchy::subject_issued(const std::string& subject_name) const {
  if (std::find(issued_subjects_.begin(), issued_subjects_.end(), subject_name) !=
      issued_subjects_.end()) {
    return true;
  }
  return std::any_of(approvals_.begin(), approvals_.end(), [&](const auto& entry) {
    return requests_.at(entry.second.request_id).subject_name == subject_name;
  });
}

Approval CaHierarchy::ra_approve(std::uint64_t request_id) {
  auto it = requests_.find(request_id);
  if (it == requests_.end()) {
    throw Error(ErrorCode::UnknownRequest, "request " + std::to_string(request_id));
  }
  if (approved_requests_.count(request_id)) {
    throw Error(ErrorCode::AlreadyApproved, "request " + std::to_string(request_id));
  }
  if (options_.duplicate_subjects == DuplicateSubjectPolicy::Reject &&
      subject_issued(it->second.subject_name)) {
    throw Error(ErrorCode::DuplicateSubject, it->second.subject_name);
  }
  Approval approval{next_approval_++, request_id};
  approvals_.emplace(approval.approval_id, approval);
  approved_requests_[request_id] = true;
  log_.push_back({2, "ra", subordinates_.front().name, "approve"});
  return approval;
}

Certificate CaHierarchy::ca_issue(const Approval& approval, LogicalClock& clock) {
  auto it = approvals_.find(approval.approval_id);
  if (it == approvals_.end() || it->second.request_id != approval.request_id) {
    throw Error(ErrorCode::UnknownApproval, "approval " + std::to_string(approval.approval_id));
  }
  Csr csr = requests_.at(approval.request_id);
  approvals_.erase(it);

  const CaNode& issuer = subordinates_.front();
  Certificate cert = sign_certificate(issuer, csr.subject_name, csr.subject_public_key,
                                      clock.tick(), options_.leaf_lifetime);
  log_.push_back({3, issuer.name, "va", "register-certificate"});
  log_.push_back({4, issuer.name, csr.subject_name, "deliver-certificate"});
  return cert;
}

Certificate CaHierarchy::issue_as(const std::string& ca_name, const std::string& subject_name,
                                  const VerifyKey& subject_key, LogicalClock& clock) {
  const CaNode* issuer = find_ca(ca_name);
  if (!issuer) throw Error(ErrorCode::UnknownRequest, "no CA named '" + ca_name + "'");
  std::uint64_t lifetime =
      issuer == &root_ ? options_.ca_lifetime : options_.leaf_lifetime;
  return sign_certificate(*issuer, subject_name, subject_key, clock.tick(), lifetime);
}

void CaHierarchy::revoke(std::uint64_t serial) {
  auto it = va_.find(serial);
  if (it == va_.end()) throw Error(ErrorCode::UnknownCredential, "serial " + std::to_string(serial));
  it->second.status = CertStatus::Revoked;
}

std::optional<CertStatus> CaHierarchy::va_status(std::uint64_t serial) const {
  auto it = va_.find(serial);
  if (it == va_.end()) return std::nullopt;
  return it->second.status;
}

const CaNode* CaHierarchy::find_ca(const std::string& name) const {
  if (name == root_.name) return &root_;
  for (const auto& sub : subordinates_) {
    if (sub.name == name) return &sub;
  }
  return nullptr;
}

bool CaHierarchy::chain_ok(const Certificate& cert, const LogicalClock& clock,
                           CertFault& fault) const {
  // Leaf first, ending at the self-signed root. Signatures decide before
  // validity, and validity before VA status.
  std::vector<const Certificate*> chain{&cert};
  const Certificate* current = &cert;
  for (int depth = 0;; ++depth) {
    const CaNode* issuer = find_ca(current->issuer_name);
    if (!issuer || depth > 4 ||
        !verify(issuer->keys.public_key, current->signing_payload(), current->issuer_signature)) {
      fault = CertFault::ChainBroken;
      return false;
    }
    if (issuer == &root_ && current->subject_name == root_.name) {
      if (current->subject_public_key != root_.keys.public_key) {
        fault = CertFault::ChainBroken;
        return false;
      }
      break;
    }
    current = &issuer->cert;
    chain.push_back(current);
  }
  if (std::find(trusted_roots_.begin(), trusted_roots_.end(), root_.keys.public_key) ==
      trusted_roots_.end()) {
    fault = CertFault::ChainBroken;
    return false;
  }

  const std::uint64_t now = clock.now();
  for (const Certificate* c : chain) {
    if (now < c->not_before || now > c->not_after) {
      fault = CertFault::Expired;
      return false;
    }
  }
  for (const Certificate* c : chain) {
    auto it = va_.find(c->serial);
    if (it == va_.end() || it->second.fingerprint != c->fingerprint()) {
      fault = CertFault::UnknownSerial;
      return false;
    }
    if (it->second.status == CertStatus::Revoked) {
      fault = CertFault::Revoked;
      return false;
    }
  }
  return true;
}

CertVerdict CaHierarchy::verify_certificate(const Certificate& cert,
                                            const LogicalClock& clock) const {
  CertFault fault{};
  if (!chain_ok(cert, clock, fault)) return CertVerdict{fault};
  return CertVerdict{};
}

CertVerdict CaHierarchy::relying_party_check(const Certificate& cert, const LogicalClock& clock) {
  log_.push_back({5, cert.subject_name, "server", "present-certificate"});
  log_.push_back({6, "server", "va", "status-query"});
  CertVerdict verdict = verify_certificate(cert, clock);
  log_.push_back({7, "va", "server", verdict.valid() ? "confirm" : "deny"});
  return verdict;
}

}  // namespace ssi
