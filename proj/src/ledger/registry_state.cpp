#include "ssi/ledger/registry_state.hpp"

namespace ssi {

std::string_view to_string(CredentialStatus status) noexcept {
  switch (status) {
    case CredentialStatus::Unknown: return "unknown";
    case CredentialStatus::Active: return "active";
    case CredentialStatus::Revoked: return "revoked";
  }
  return "unknown";
}

void RegistryState::verify_submitter(const RegistryTransaction& tx) const {
  const DidDocument* doc = find_did(tx.acting_did());
  if (doc == nullptr) {
    throw Error(ErrorCode::UnknownDid, tx.acting_did().str() + " is not registered");
  }
  if (!verify(doc->verification_key, tx.signing_payload(), tx.submitter_signature)) {
    throw Error(ErrorCode::BadSignature, "submitter signature does not verify");
  }
}

void RegistryState::check(const RegistryTransaction& tx) const {
  if (const auto* reg = std::get_if<RegisterDid>(&tx.body)) {
    const DidDocument& doc = reg->did_document;
    if (!doc.self_consistent()) {
      throw Error(ErrorCode::BadSignature, "document is not self-certified");
    }
    if (!verify(doc.verification_key, tx.signing_payload(), tx.submitter_signature)) {
      throw Error(ErrorCode::BadSignature, "registration not signed by the document key");
    }
    if (const DidDocument* existing = find_did(doc.did)) {
      if (existing->verification_key != doc.verification_key) {
        throw Error(ErrorCode::BadSignature, "re-registration under a different key");
      }
      if (doc.created_at <= existing->created_at) {
        throw Error(ErrorCode::StaleDocument, "re-registration is not newer than current");
      }
    }
    return;
  }

  verify_submitter(tx);

  if (const auto* def = std::get_if<DefineSchema>(&tx.body)) {
    if (!def->schema.well_formed()) {
      throw Error(ErrorCode::SchemaMismatch, "schema id does not recompute or names repeat");
    }
    if (schemas_.contains(def->schema.schema_id)) {
      throw Error(ErrorCode::DuplicateSchema, to_hex(def->schema.schema_id));
    }
  } else if (const auto* anchor = std::get_if<AnchorCredential>(&tx.body)) {
    if (anchors_.contains(anchor->credential_id)) {
      throw Error(ErrorCode::DuplicateCredential, to_hex(anchor->credential_id));
    }
  } else if (const auto* revoke = std::get_if<Revoke>(&tx.body)) {
    const AnchorRecord* record = find_anchor(revoke->credential_id);
    if (record == nullptr) {
      throw Error(ErrorCode::UnknownCredential, to_hex(revoke->credential_id));
    }
    if (record->issuer_did != revoke->issuer_did) {
      throw Error(ErrorCode::NotIssuer, revoke->issuer_did.str() + " did not anchor it");
    }
    if (record->revoked) {
      throw Error(ErrorCode::AlreadyRevoked, to_hex(revoke->credential_id));
    }
  }
}

void RegistryState::apply(const RegistryTransaction& tx) {
  check(tx);
  if (const auto* reg = std::get_if<RegisterDid>(&tx.body)) {
    dids_.insert_or_assign(reg->did_document.did, reg->did_document);
  } else if (const auto* def = std::get_if<DefineSchema>(&tx.body)) {
    schemas_.emplace(def->schema.schema_id, def->schema);
  } else if (const auto* anchor = std::get_if<AnchorCredential>(&tx.body)) {
    anchors_.emplace(anchor->credential_id,
                     AnchorRecord{anchor->issuer_did, anchor->commitment_root, false});
  } else if (const auto* revoke = std::get_if<Revoke>(&tx.body)) {
    anchors_.at(revoke->credential_id).revoked = true;
  }
}

const DidDocument* RegistryState::find_did(const Did& did) const {
  auto it = dids_.find(did);
  return it == dids_.end() ? nullptr : &it->second;
}

const CredentialSchema* RegistryState::find_schema(const Hash256& schema_id) const {
  auto it = schemas_.find(schema_id);
  return it == schemas_.end() ? nullptr : &it->second;
}

const AnchorRecord* RegistryState::find_anchor(const Hash256& credential_id) const {
  auto it = anchors_.find(credential_id);
  return it == anchors_.end() ? nullptr : &it->second;
}

CredentialStatus RegistryState::credential_status(const Hash256& credential_id) const {
  const AnchorRecord* record = find_anchor(credential_id);
  if (record == nullptr) return CredentialStatus::Unknown;
  return record->revoked ? CredentialStatus::Revoked : CredentialStatus::Active;
}

}  // namespace ssi
