#include "ssi/identity/did_document.hpp"

#include "ssi/core/canonical.hpp"

namespace ssi {

Bytes DidDocument::signing_payload() const {
  CanonicalWriter w("ssi/did-document/v1");
  w.text(did.str()).fixed(verification_key).fixed(key_agreement_key);
  w.count(service_endpoints.size());
  for (const auto& ep : service_endpoints) w.text(ep.name).text(ep.uri);
  w.u64(created_at);
  return w.take();
}

bool DidDocument::self_consistent() const {
  return derive_did(verification_key) == did &&
         verify(verification_key, signing_payload(), controller_signature);
}

DidDocument make_did_document(const Identity& controller,
                              std::vector<ServiceEndpoint> service_endpoints,
                              std::uint64_t created_at) {
  DidDocument doc{
      .did = controller.did,
      .verification_key = controller.keys.public_key,
      .key_agreement_key = controller.keys.agreement_public_key,
      .service_endpoints = std::move(service_endpoints),
      .created_at = created_at,
      .controller_signature = {},
  };
  doc.controller_signature = sign(controller.keys.private_key, doc.signing_payload());
  return doc;
}

json::Json to_json(const DidDocument& doc) {
  json::Json endpoints = json::Json::array();
  for (const auto& ep : doc.service_endpoints) {
    endpoints.push_back({{"name", ep.name}, {"uri", ep.uri}});
  }
  return {
      {"did", doc.did.str()},
      {"verification_key", to_hex(doc.verification_key)},
      {"key_agreement_key", to_hex(doc.key_agreement_key)},
      {"service_endpoints", std::move(endpoints)},
      {"created_at", doc.created_at},
      {"controller_signature", to_hex(doc.controller_signature)},
  };
}

DidDocument did_document_from_json(const json::Json& value) {
  std::vector<ServiceEndpoint> endpoints;
  for (const auto& ep : json::get_array(value, "service_endpoints")) {
    endpoints.push_back({json::get_string(ep, "name"), json::get_string(ep, "uri")});
  }
  return DidDocument{
      .did = get_did(value, "did"),
      .verification_key = json::get_fixed<VerifyKey>(value, "verification_key"),
      .key_agreement_key = json::get_fixed<AgreementKey>(value, "key_agreement_key"),
      .service_endpoints = std::move(endpoints),
      .created_at = json::get_u64(value, "created_at"),
      .controller_signature = json::get_fixed<Signature>(value, "controller_signature"),
  };
}

}  // namespace ssi
