#include "ssi/credential/credential_json.hpp"

namespace ssi {
namespace {

constexpr std::string_view kCredentialFormat = "ssi-credential/v1";
constexpr std::string_view kPresentationFormat = "ssi-presentation/v1";

void expect_format(const json::Json& value, std::string_view format) {
  if (json::get_string(value, "format") != format) {
    throw Error(ErrorCode::ParseError, "expected a " + std::string(format) + " document");
  }
}

}  // namespace

json::Json to_json(const Credential& c) {
  json::Json attributes = json::Json::array();
  for (const auto& a : c.attributes) attributes.push_back({{"name", a.name}, {"value", a.value}});
  json::Json salts = json::Json::array();
  for (const auto& s : c.salts) salts.push_back(to_hex(s));
  return {
      {"format", kCredentialFormat},
      {"credential_id", to_hex(c.credential_id)},
      {"schema_id", to_hex(c.schema_id)},
      {"issuer_did", c.issuer_did.str()},
      {"holder_did", c.holder_did.str()},
      {"attributes", std::move(attributes)},
      {"salts", std::move(salts)},
      {"commitment_root", to_hex(c.commitment_root)},
      {"issuance_time", c.issuance_time},
      {"issuer_signature", to_hex(c.issuer_signature)},
  };
}

Credential credential_from_json(const json::Json& value) {
  expect_format(value, kCredentialFormat);
  std::vector<Attribute> attributes;
  for (const auto& a : json::get_array(value, "attributes")) {
    attributes.push_back({json::get_string(a, "name"), json::get_string(a, "value")});
  }
  std::vector<Salt> salts;
  for (const auto& s : json::get_array(value, "salts")) {
    if (!s.is_string()) throw Error(ErrorCode::ParseError, "salt is not a string");
    salts.push_back(fixed_from_hex<Salt>(s.get<std::string>()));
  }
  return Credential{
      .credential_id = json::get_fixed<Hash256>(value, "credential_id"),
      .schema_id = json::get_fixed<Hash256>(value, "schema_id"),
      .issuer_did = get_did(value, "issuer_did"),
      .holder_did = get_did(value, "holder_did"),
      .attributes = std::move(attributes),
      .salts = std::move(salts),
      .commitment_root = json::get_fixed<Hash256>(value, "commitment_root"),
      .issuance_time = json::get_u64(value, "issuance_time"),
      .issuer_signature = json::get_fixed<Signature>(value, "issuer_signature"),
  };
}

json::Json to_json(const Presentation& p) {
  json::Json revealed = json::Json::array();
  for (const auto& r : p.revealed) {
    json::Json path = json::Json::array();
    for (const auto& s : r.merkle_path.siblings) path.push_back(to_hex(s));
    revealed.push_back({
        {"name", r.name},
        {"value", r.value},
        {"salt", to_hex(r.salt)},
        {"leaf_index", r.merkle_path.leaf_index},
        {"merkle_path", std::move(path)},
    });
  }
  return {
      {"format", kPresentationFormat},
      {"credential_id", to_hex(p.credential_id)},
      {"schema_id", to_hex(p.schema_id)},
      {"issuer_did", p.issuer_did.str()},
      {"holder_did", p.holder_did.str()},
      {"commitment_root", to_hex(p.commitment_root)},
      {"issuance_time", p.issuance_time},
      {"revealed", std::move(revealed)},
      {"issuer_signature", to_hex(p.issuer_signature)},
      {"challenge", to_hex(p.challenge)},
      {"holder_signature", to_hex(p.holder_signature)},
  };
}

Presentation presentation_from_json(const json::Json& value) {
  expect_format(value, kPresentationFormat);
  std::vector<RevealedAttribute> revealed;
  for (const auto& r : json::get_array(value, "revealed")) {
    MerklePath path{json::get_u64(r, "leaf_index"), {}};
    for (const auto& s : json::get_array(r, "merkle_path")) {
      if (!s.is_string()) throw Error(ErrorCode::ParseError, "merkle sibling is not a string");
      path.siblings.push_back(fixed_from_hex<Hash256>(s.get<std::string>()));
    }
    revealed.push_back({json::get_string(r, "name"), json::get_string(r, "value"),
                        json::get_fixed<Salt>(r, "salt"), std::move(path)});
  }
  return Presentation{
      .credential_id = json::get_fixed<Hash256>(value, "credential_id"),
      .schema_id = json::get_fixed<Hash256>(value, "schema_id"),
      .issuer_did = get_did(value, "issuer_did"),
      .holder_did = get_did(value, "holder_did"),
      .commitment_root = json::get_fixed<Hash256>(value, "commitment_root"),
      .issuance_time = json::get_u64(value, "issuance_time"),
      .revealed = std::move(revealed),
      .issuer_signature = json::get_fixed<Signature>(value, "issuer_signature"),
      .challenge = json::get_fixed<Challenge>(value, "challenge"),
      .holder_signature = json::get_fixed<Signature>(value, "holder_signature"),
  };
}

std::string serialize_credential(const Credential& credential) {
  return json::dump_canonical(to_json(credential));
}

Credential parse_credential(std::string_view text) {
  return credential_from_json(json::parse(text));
}

std::string serialize_presentation(const Presentation& presentation) {
  return json::dump_canonical(to_json(presentation));
}

Presentation parse_presentation(std::string_view text) {
  return presentation_from_json(json::parse(text));
}

}  // namespace ssi
