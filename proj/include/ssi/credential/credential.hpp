#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssi/credential/merkle.hpp"
#include "ssi/identity/did.hpp"

namespace ssi {

struct Attribute {
  std::string name;
  std::string value;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Issued credential. Attributes follow the schema's order; salts[i]
/// belongs to attributes[i]. The issuer signs the identifiers, the
/// commitment root and the issuance time, never the values directly.
struct Credential {
  Hash256 credential_id;
  Hash256 schema_id;
  Did issuer_did;
  Did holder_did;
  std::vector<Attribute> attributes;
  std::vector<Salt> salts;
  Hash256 commitment_root;
  std::uint64_t issuance_time = 0;
  Signature issuer_signature;

  std::vector<Hash256> commitments() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Salt count matches, and both the root and the id recompute.
  bool internally_consistent() const;

  friend bool operator==(const Credential&, const Credential&) = default;
};

Hash256 compute_credential_id(const Hash256& schema_id, const Did& holder_did,
                              std::uint64_t issuance_time, const Hash256& commitment_root);

/// Bytes covered by the issuer signature.
Bytes issuer_signing_payload(const Hash256& credential_id, const Hash256& schema_id,
                             const Did& issuer_did, const Did& holder_did,
                             const Hash256& commitment_root, std::uint64_t issuance_time);

}  // namespace ssi
