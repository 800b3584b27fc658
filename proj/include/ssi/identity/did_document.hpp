#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssi/core/json_codec.hpp"
#include "ssi/identity/did.hpp"

namespace ssi {

struct ServiceEndpoint {
  std::string name;
  std::string uri;

  friend bool operator==(const ServiceEndpoint&, const ServiceEndpoint&) = default;
};

/// Public record binding a DID to its keys and service endpoints. The
/// controller signature covers every other field in declaration order.
struct DidDocument {
  Did did;
  VerifyKey verification_key;
  AgreementKey key_agreement_key;
  std::vector<ServiceEndpoint> service_endpoints;
  std::uint64_t created_at = 0;
  Signature controller_signature;

  /// Canonical bytes covered by controller_signature.
  Bytes signing_payload() const;

  /// The DID derives from verification_key and the signature verifies.
  bool self_consistent() const;

  friend bool operator==(const DidDocument&, const DidDocument&) = default;
};

DidDocument make_did_document(const Identity& controller,
                              std::vector<ServiceEndpoint> service_endpoints,
                              std::uint64_t created_at);

json::Json to_json(const DidDocument& doc);
DidDocument did_document_from_json(const json::Json& value);

}  // namespace ssi
