#include "ssi/agent/wallet.hpp"

#include "ssi/core/json_codec.hpp"
#include "ssi/credential/credential_json.hpp"

namespace ssi {
namespace {

constexpr std::string_view kFormat = "ssi-wallet/v1";

}  // namespace

Wallet Wallet::create(const Seed& seed) { return Wallet(Identity::from_seed(seed)); }

void Wallet::add_credential(Credential credential) {
  if (credential.holder_did != did()) {
    throw Error(ErrorCode::WrongHolderKey, "credential is held by " + credential.holder_did.str());
  }
  if (!credential.internally_consistent()) {
    throw Error(ErrorCode::CorruptCredential, to_hex(credential.credential_id));
  }
  credentials_.push_back(std::move(credential));
}

std::optional<Credential> Wallet::find_credential(const Hash256& credential_id) const {
  for (const auto& c : credentials_) {
    if (c.credential_id == credential_id) return c;
  }
  return std::nullopt;
}

void Wallet::add_other_data(std::string label, Bytes blob) {
  other_data_.push_back({std::move(label), std::move(blob)});
}

std::string wallet_save(const Wallet& wallet) {
  const KeyPair& keys = wallet.keypair();
  json::Json credentials = json::Json::array();
  for (const auto& c : wallet.credentials()) credentials.push_back(to_json(c));
  json::Json other = json::Json::array();
  for (const auto& o : wallet.other_data()) {
    other.push_back({{"label", o.label}, {"blob", to_base64(o.blob)}});
  }
  json::Json doc = {
      {"format", kFormat},
      {"did", wallet.did().str()},
      {"keys",
       {
           {"key_id", keys.key_id},
           {"verification_key", to_hex(keys.public_key)},
           {"key_agreement_key", to_hex(keys.agreement_public_key)},
           {"seed", to_hex(keys.private_key.seed())},
       }},
      {"credentials", std::move(credentials)},
      {"other_data", std::move(other)},
  };
  return json::dump_canonical(doc);
}

Wallet wallet_load(std::string_view text) {
  json::Json doc = json::parse(text);
  if (json::get_string(doc, "format") != kFormat) {
    throw Error(ErrorCode::ParseError, "not an " + std::string(kFormat) + " document");
  }
  const json::Json& keys = json::field(doc, "keys");
  Seed seed = json::get_fixed<Seed>(keys, "seed");
  Did stored_did = get_did(doc, "did");

  Wallet wallet(Identity::from_seed(seed));
  const KeyPair& derived = wallet.keypair();
  if (stored_did != wallet.did() ||
      json::get_fixed<VerifyKey>(keys, "verification_key") != derived.public_key ||
      json::get_fixed<AgreementKey>(keys, "key_agreement_key") != derived.agreement_public_key ||
      json::get_string(keys, "key_id") != derived.key_id) {
    throw Error(ErrorCode::KeyMismatch, "stored DID or public keys do not derive from the seed");
  }

  for (const auto& c : json::get_array(doc, "credentials")) {
    Credential credential = credential_from_json(c);
    if (credential.holder_did != wallet.did() || !credential.internally_consistent()) {
      throw Error(ErrorCode::CorruptCredential, to_hex(credential.credential_id));
    }
    wallet.credentials_.push_back(std::move(credential));
  }
  for (const auto& o : json::get_array(doc, "other_data")) {
    Bytes blob;
    try {
      blob = from_base64(json::get_string(o, "blob"));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, std::string("other_data blob: ") + e.what());
    }
    wallet.other_data_.push_back({json::get_string(o, "label"), std::move(blob)});
  }
  return wallet;
}

}  // namespace ssi
