#include "ssi/ledger/transaction.hpp"

#include "ssi/core/canonical.hpp"

namespace ssi {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Bytes RegistryTransaction::signing_payload() const {
  return std::visit(
      overloaded{
          [](const RegisterDid& tx) {
            CanonicalWriter w("ssi/tx/register-did/v1");
            w.bytes(tx.did_document.signing_payload()).fixed(tx.did_document.controller_signature);
            return w.take();
          },
          [](const DefineSchema& tx) {
            CanonicalWriter w("ssi/tx/define-schema/v1");
            append_canonical(w, tx.schema);
            return w.take();
          },
          [](const AnchorCredential& tx) {
            return CanonicalWriter("ssi/tx/anchor-credential/v1")
                .fixed(tx.credential_id)
                .text(tx.issuer_did.str())
                .fixed(tx.commitment_root)
                .take();
          },
          [](const Revoke& tx) {
            return CanonicalWriter("ssi/tx/revoke/v1")
                .fixed(tx.credential_id)
                .text(tx.issuer_did.str())
                .take();
          },
      },
      body);
}

Hash256 RegistryTransaction::hash() const {
  Bytes payload = signing_payload();
  return sha256(CanonicalWriter("ssi/tx-hash/v1").bytes(payload).fixed(submitter_signature).data());
}

const Did& RegistryTransaction::acting_did() const {
  return std::visit(overloaded{
                        [](const RegisterDid& tx) -> const Did& { return tx.did_document.did; },
                        [](const DefineSchema& tx) -> const Did& { return tx.schema.issuer_did; },
                        [](const AnchorCredential& tx) -> const Did& { return tx.issuer_did; },
                        [](const Revoke& tx) -> const Did& { return tx.issuer_did; },
                    },
                    body);
}

std::string_view RegistryTransaction::kind() const {
  return std::visit(overloaded{
                        [](const RegisterDid&) { return std::string_view("register_did"); },
                        [](const DefineSchema&) { return std::string_view("define_schema"); },
                        [](const AnchorCredential&) { return std::string_view("anchor_credential"); },
                        [](const Revoke&) { return std::string_view("revoke"); },
                    },
                    body);
}

RegistryTransaction sign_transaction(TransactionBody body, const KeyPair& submitter) {
  RegistryTransaction tx{std::move(body), {}};
  tx.submitter_signature = sign(submitter.private_key, tx.signing_payload());
  return tx;
}

RegistryTransaction make_register_did(const Identity& controller, const DidDocument& document) {
  return sign_transaction(RegisterDid{document}, controller.keys);
}

json::Json to_json(const RegistryTransaction& tx) {
  json::Json out = {{"type", tx.kind()}};
  std::visit(overloaded{
                 [&](const RegisterDid& t) { out["did_document"] = to_json(t.did_document); },
                 [&](const DefineSchema& t) { out["schema"] = to_json(t.schema); },
                 [&](const AnchorCredential& t) {
                   out["credential_id"] = to_hex(t.credential_id);
                   out["issuer_did"] = t.issuer_did.str();
                   out["commitment_root"] = to_hex(t.commitment_root);
                 },
                 [&](const Revoke& t) {
                   out["credential_id"] = to_hex(t.credential_id);
                   out["issuer_did"] = t.issuer_did.str();
                 },
             },
             tx.body);
  out["submitter_signature"] = to_hex(tx.submitter_signature);
  return out;
}

RegistryTransaction transaction_from_json(const json::Json& value) {
  std::string type = json::get_string(value, "type");
  TransactionBody body = [&]() -> TransactionBody {
    if (type == "register_did") {
      return RegisterDid{did_document_from_json(json::field(value, "did_document"))};
    }
    if (type == "define_schema") {
      return DefineSchema{schema_from_json(json::field(value, "schema"))};
    }
    if (type == "anchor_credential") {
      return AnchorCredential{json::get_fixed<Hash256>(value, "credential_id"),
                              get_did(value, "issuer_did"),
                              json::get_fixed<Hash256>(value, "commitment_root")};
    }
    if (type == "revoke") {
      return Revoke{json::get_fixed<Hash256>(value, "credential_id"),
                    get_did(value, "issuer_did")};
    }
    throw Error(ErrorCode::ParseError, "unknown transaction type '" + type + "'");
  }();
  return RegistryTransaction{std::move(body),
                             json::get_fixed<Signature>(value, "submitter_signature")};
}

}  // namespace ssi
