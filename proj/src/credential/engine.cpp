#include "ssi/credential/engine.hpp"

#include <algorithm>
#include <map>

namespace ssi {
namespace {

std::optional<DidDocument> try_resolve(const RegistryView& registry, const Did& did) {
  try {
    return registry.resolve_did(did);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownDid) throw;
    return std::nullopt;
  }
}

std::optional<CredentialSchema> try_schema(const RegistryView& registry, const Hash256& id) {
  try {
    return registry.lookup_schema(id);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownSchema) throw;
    return std::nullopt;
  }
}

bool issuer_signature_valid(const RegistryView& registry, const Hash256& credential_id,
                            const Hash256& schema_id, const Did& issuer_did,
                            const Did& holder_did, const Hash256& commitment_root,
                            std::uint64_t issuance_time, const Signature& signature) {
  auto issuer = try_resolve(registry, issuer_did);
  if (!issuer) return false;
  if (compute_credential_id(schema_id, holder_did, issuance_time, commitment_root) !=
      credential_id) {
    return false;
  }
  return verify(issuer->verification_key,
                issuer_signing_payload(credential_id, schema_id, issuer_did, holder_did,
                                       commitment_root, issuance_time),
                signature);
}

bool status_active(const RegistryView& registry, const Hash256& credential_id,
                   const Did& issuer_did, const Hash256& commitment_root) {
  auto record = registry.anchor(credential_id);
  return record && !record->revoked && record->issuer_did == issuer_did &&
         record->commitment_root == commitment_root;
}

}  // namespace

std::string_view to_string(Check check) noexcept {
  switch (check) {
    case Check::SchemaKnown: return "schema_known";
    case Check::ChallengeMatch: return "challenge_match";
    case Check::MerkleProofs: return "merkle_proofs";
    case Check::IssuerSignature: return "issuer_signature";
    case Check::HolderSignature: return "holder_signature";
    case Check::StatusActive: return "status_active";
  }
  return "unknown";
}

bool VerificationReport::accepted() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<Check> VerificationReport::reject_cause() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.check;
  }
  return std::nullopt;
}

std::optional<bool> VerificationReport::passed(Check check) const {
  for (const auto& c : checks) {
    if (c.check == check) return c.passed;
  }
  return std::nullopt;
}

json::Json to_json(const VerificationReport& report) {
  json::Json checks = json::Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"check", to_string(c.check)}, {"passed", c.passed}});
  }
  json::Json out = {{"verdict", report.accepted() ? "accept" : "reject"}};
  if (auto cause = report.reject_cause()) {
    out["cause"] = to_string(*cause);
  } else {
    out["cause"] = nullptr;
  }
  out["checks"] = std::move(checks);
  return out;
}

CredentialSchema define_schema(const Identity& issuer, std::string name, std::uint64_t version,
                               std::vector<std::string> attribute_names, LedgerSession& session) {
  RegistryView registry = session.view();
  registry.resolve_did(issuer.did);  // UnknownDid

  CredentialSchema schema =
      make_schema(issuer.did, std::move(name), version, std::move(attribute_names));
  if (try_schema(registry, schema.schema_id)) {
    throw Error(ErrorCode::DuplicateSchema, to_hex(schema.schema_id));
  }
  session.submit(sign_transaction(DefineSchema{schema}, issuer.keys));
  return schema;
}

Credential issue_credential(const Identity& issuer, const Did& holder_did,
                            const CredentialSchema& schema, const std::vector<Attribute>& values,
                            LedgerSession& session, RandomSource& rng) {
  RegistryView registry = session.view();
  registry.resolve_did(issuer.did);  // UnknownDid
  if (schema.issuer_did != issuer.did) {
    throw Error(ErrorCode::NotSchemaOwner, issuer.did.str() + " does not own the schema");
  }
  if (registry.lookup_schema(schema.schema_id) != schema) {
    throw Error(ErrorCode::SchemaMismatch, "schema differs from the anchored definition");
  }

  std::map<std::string_view, std::string_view> by_name;
  for (const auto& v : values) {
    if (!by_name.emplace(v.name, v.value).second) {
      throw Error(ErrorCode::SchemaMismatch, "attribute '" + v.name + "' given twice");
    }
  }
  if (by_name.size() != schema.attribute_names.size()) {
    throw Error(ErrorCode::SchemaMismatch, "values must cover every schema attribute once");
  }

  std::vector<Attribute> attributes;
  std::vector<Salt> salts;
  for (const auto& name : schema.attribute_names) {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw Error(ErrorCode::SchemaMismatch, "missing value for '" + name + "'");
    }
    attributes.push_back({name, std::string(it->second)});
    salts.push_back(rng.draw<Salt>());
  }

  Credential credential{
      .credential_id = {},
      .schema_id = schema.schema_id,
      .issuer_did = issuer.did,
      .holder_did = holder_did,
      .attributes = std::move(attributes),
      .salts = std::move(salts),
      .commitment_root = {},
      .issuance_time = session.clock().tick(),
      .issuer_signature = {},
  };
  credential.commitment_root = MerkleTree(credential.commitments()).root();
  credential.credential_id = compute_credential_id(credential.schema_id, credential.holder_did,
                                                   credential.issuance_time,
                                                   credential.commitment_root);
  credential.issuer_signature = sign(
      issuer.keys.private_key,
      issuer_signing_payload(credential.credential_id, credential.schema_id, credential.issuer_did,
                             credential.holder_did, credential.commitment_root,
                             credential.issuance_time));

  session.submit(sign_transaction(
      AnchorCredential{credential.credential_id, issuer.did, credential.commitment_root},
      issuer.keys));
  return credential;
}

Presentation create_presentation(const Credential& credential,
                                 const std::set<std::string>& reveal, const Challenge& challenge,
                                 const KeyPair& holder) {
  if (derive_did(holder.public_key) != credential.holder_did) {
    throw Error(ErrorCode::WrongHolderKey, "key does not control " + credential.holder_did.str());
  }
  std::vector<std::size_t> indices;
  for (const auto& name : reveal) {
    auto index = credential.index_of(name);
    if (!index) throw Error(ErrorCode::UnknownAttribute, "'" + name + "' is not in the credential");
    indices.push_back(*index);
  }
  std::sort(indices.begin(), indices.end());

  MerkleTree tree(credential.commitments());
  Presentation p{
      .credential_id = credential.credential_id,
      .schema_id = credential.schema_id,
      .issuer_did = credential.issuer_did,
      .holder_did = credential.holder_did,
      .commitment_root = credential.commitment_root,
      .issuance_time = credential.issuance_time,
      .revealed = {},
      .issuer_signature = credential.issuer_signature,
      .challenge = challenge,
      .holder_signature = {},
  };
  for (std::size_t i : indices) {
    p.revealed.push_back({credential.attributes[i].name, credential.attributes[i].value,
                          credential.salts[i], tree.path(i)});
  }
  p.holder_signature = sign(holder.private_key,
                            holder_signing_payload(p.credential_id, p.revealed_digest(), challenge));
  return p;
}

VerificationReport verify_presentation(const RegistryView& registry,
                                       const Presentation& presentation,
                                       const Challenge& expected_challenge) {
  const Presentation& p = presentation;
  auto schema = try_schema(registry, p.schema_id);

  bool schema_known = schema.has_value() && schema->issuer_did == p.issuer_did;
  if (schema_known) {
    std::set<std::string_view> seen;
    for (const auto& r : p.revealed) {
      bool in_schema = std::find(schema->attribute_names.begin(), schema->attribute_names.end(),
                                 r.name) != schema->attribute_names.end();
      if (!in_schema || !seen.insert(r.name).second) schema_known = false;
    }
  }

  bool merkle_ok = schema_known;
  if (merkle_ok) {
    const std::size_t leaves = schema->attribute_names.size();
    for (const auto& r : p.revealed) {
      const auto& path = r.merkle_path;
      if (path.leaf_index >= leaves || schema->attribute_names[path.leaf_index] != r.name ||
          !verify_merkle_path(attribute_commitment(r.name, r.value, r.salt), path,
                              p.commitment_root, leaves)) {
        merkle_ok = false;
        break;
      }
    }
  }

  bool holder_ok = false;
  if (auto holder = try_resolve(registry, p.holder_did)) {
    holder_ok = verify(holder->verification_key,
                       holder_signing_payload(p.credential_id, p.revealed_digest(),
                                              expected_challenge),
                       p.holder_signature);
  }

  return VerificationReport{{
      {Check::SchemaKnown, schema_known},
      {Check::ChallengeMatch, p.challenge == expected_challenge},
      {Check::MerkleProofs, merkle_ok},
      {Check::IssuerSignature,
       issuer_signature_valid(registry, p.credential_id, p.schema_id, p.issuer_did, p.holder_did,
                              p.commitment_root, p.issuance_time, p.issuer_signature)},
      {Check::HolderSignature, holder_ok},
      {Check::StatusActive,
       status_active(registry, p.credential_id, p.issuer_did, p.commitment_root)},
  }};
}

VerificationReport verify_credential(const RegistryView& registry, const Credential& credential) {
  const Credential& c = credential;
  auto schema = try_schema(registry, c.schema_id);

  bool schema_known = schema.has_value() && schema->issuer_did == c.issuer_did &&
                      schema->attribute_names.size() == c.attributes.size();
  for (std::size_t i = 0; schema_known && i < c.attributes.size(); ++i) {
    schema_known = schema->attribute_names[i] == c.attributes[i].name;
  }

  return VerificationReport{{
      {Check::SchemaKnown, schema_known},
      {Check::MerkleProofs, c.internally_consistent()},
      {Check::IssuerSignature,
       issuer_signature_valid(registry, c.credential_id, c.schema_id, c.issuer_did, c.holder_did,
                              c.commitment_root, c.issuance_time, c.issuer_signature)},
      {Check::StatusActive,
       status_active(registry, c.credential_id, c.issuer_did, c.commitment_root)},
  }};
}

void revoke_credential(const Identity& issuer, const Hash256& credential_id,
                       LedgerSession& session) {
  auto record = session.view().anchor(credential_id);
  if (!record) throw Error(ErrorCode::UnknownCredential, to_hex(credential_id));
  if (record->issuer_did != issuer.did) {
    throw Error(ErrorCode::NotIssuer, issuer.did.str() + " did not issue this credential");
  }
  if (record->revoked) throw Error(ErrorCode::AlreadyRevoked, to_hex(credential_id));
  session.submit(sign_transaction(Revoke{credential_id, issuer.did}, issuer.keys));
}

bool tamper_check(const Credential& credential, const VerifyKey& issuer_key) {
  return credential.internally_consistent() &&
         verify(issuer_key,
                issuer_signing_payload(credential.credential_id, credential.schema_id,
                                       credential.issuer_did, credential.holder_did,
                                       credential.commitment_root, credential.issuance_time),
                credential.issuer_signature);
}

bool tamper_check(const Credential& credential, const RegistryView& registry) {
  auto issuer = try_resolve(registry, credential.issuer_did);
  return issuer && tamper_check(credential, issuer->verification_key);
}

}  // namespace ssi
