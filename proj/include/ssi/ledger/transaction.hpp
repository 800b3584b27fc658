#pragma once

#include <string_view>
#include <variant>

#include "ssi/identity/did_document.hpp"
#include "ssi/ledger/schema.hpp"

namespace ssi {

struct RegisterDid {
  DidDocument did_document;
  friend bool operator==(const RegisterDid&, const RegisterDid&) = default;
};

struct DefineSchema {
  CredentialSchema schema;
  friend bool operator==(const DefineSchema&, const DefineSchema&) = default;
};

/// Only the commitment root reaches the ledger; attribute values never do.
struct AnchorCredential {
  Hash256 credential_id;
  Did issuer_did;
  Hash256 commitment_root;
  friend bool operator==(const AnchorCredential&, const AnchorCredential&) = default;
};

struct Revoke {
  Hash256 credential_id;
  Did issuer_did;
  friend bool operator==(const Revoke&, const Revoke&) = default;
};

using TransactionBody = std::variant<RegisterDid, DefineSchema, AnchorCredential, Revoke>;

struct RegistryTransaction {
  TransactionBody body;
  Signature submitter_signature;

  /// Canonical bytes the submitter signs.
  Bytes signing_payload() const;
  /// Hash over the signing payload followed by the signature.
  Hash256 hash() const;
  /// DID whose key must have produced submitter_signature.
  const Did& acting_did() const;
  std::string_view kind() const;

  friend bool operator==(const RegistryTransaction&, const RegistryTransaction&) = default;
};

RegistryTransaction sign_transaction(TransactionBody body, const KeyPair& submitter);

/// Self-certified registration: both signatures come from `controller`.
RegistryTransaction make_register_did(const Identity& controller, const DidDocument& document);

json::Json to_json(const RegistryTransaction& tx);
RegistryTransaction transaction_from_json(const json::Json& value);

}  // namespace ssi
