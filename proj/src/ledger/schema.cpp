#include "ssi/ledger/schema.hpp"

#include <set>

#include "ssi/core/canonical.hpp"

namespace ssi {
namespace {

bool names_unique_nonempty(const std::vector<std::string>& names) {
  if (names.empty()) return false;
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) return false;
  }
  return true;
}

}  // namespace

Hash256 compute_schema_id(const Did& issuer_did, std::string_view name, std::uint64_t version,
                          const std::vector<std::string>& attribute_names) {
  CanonicalWriter w("ssi/schema-id/v1");
  w.text(issuer_did.str()).text(name).u64(version).count(attribute_names.size());
  for (const auto& attr : attribute_names) w.text(attr);
  return sha256(w.data());
}

bool CredentialSchema::well_formed() const {
  return names_unique_nonempty(attribute_names) &&
         compute_schema_id(issuer_did, name, version, attribute_names) == schema_id;
}

CredentialSchema make_schema(const Did& issuer_did, std::string name, std::uint64_t version,
                             std::vector<std::string> attribute_names) {
  if (attribute_names.empty()) {
    throw Error(ErrorCode::DuplicateAttribute, "schema needs at least one attribute");
  }
  if (!names_unique_nonempty(attribute_names)) {
    throw Error(ErrorCode::DuplicateAttribute, "attribute names must be unique");
  }
  Hash256 id = compute_schema_id(issuer_did, name, version, attribute_names);
  return CredentialSchema{id, issuer_did, std::move(name), version, std::move(attribute_names)};
}

void append_canonical(CanonicalWriter& w, const CredentialSchema& schema) {
  w.fixed(schema.schema_id).text(schema.issuer_did.str()).text(schema.name).u64(schema.version);
  w.count(schema.attribute_names.size());
  for (const auto& attr : schema.attribute_names) w.text(attr);
}

json::Json to_json(const CredentialSchema& schema) {
  return {
      {"schema_id", to_hex(schema.schema_id)},
      {"issuer_did", schema.issuer_did.str()},
      {"name", schema.name},
      {"version", schema.version},
      {"attribute_names", schema.attribute_names},
  };
}

CredentialSchema schema_from_json(const json::Json& value) {
  std::vector<std::string> names;
  for (const auto& n : json::get_array(value, "attribute_names")) {
    if (!n.is_string()) throw Error(ErrorCode::ParseError, "attribute name is not a string");
    names.push_back(n.get<std::string>());
  }
  return CredentialSchema{
      json::get_fixed<Hash256>(value, "schema_id"),
      get_did(value, "issuer_did"),
      json::get_string(value, "name"),
      json::get_u64(value, "version"),
      std::move(names),
  };
}

}  // namespace ssi
