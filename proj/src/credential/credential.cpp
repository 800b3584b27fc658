#include "ssi/credential/credential.hpp"

#include <algorithm>

#include "ssi/core/canonical.hpp"

namespace ssi {

std::vector<Hash256> Credential::commitments() const {
  std::vector<Hash256> out;
  out.reserve(attributes.size());
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    out.push_back(attribute_commitment(attributes[i].name, attributes[i].value, salts.at(i)));
  }
  return out;
}

std::optional<std::size_t> Credential::index_of(std::string_view name) const {
  auto it = std::find_if(attributes.begin(), attributes.end(),
                         [&](const Attribute& a) { return a.name == name; });
  if (it == attributes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - attributes.begin());
}

bool Credential::internally_consistent() const {
  if (attributes.empty() || salts.size() != attributes.size()) return false;
  return MerkleTree(commitments()).root() == commitment_root &&
         compute_credential_id(schema_id, holder_did, issuance_time, commitment_root) ==
             credential_id;
}

Hash256 compute_credential_id(const Hash256& schema_id, const Did& holder_did,
                              std::uint64_t issuance_time, const Hash256& commitment_root) {
  return sha256(CanonicalWriter("ssi/credential-id/v1")
                    .fixed(schema_id)
                    .text(holder_did.str())
                    .u64(issuance_time)
                    .fixed(commitment_root)
                    .data());
}

Bytes issuer_signing_payload(const Hash256& credential_id, const Hash256& schema_id,
                             const Did& issuer_did, const Did& holder_did,
                             const Hash256& commitment_root, std::uint64_t issuance_time) {
  return CanonicalWriter("ssi/credential/v1")
      .fixed(credential_id)
      .fixed(schema_id)
      .text(issuer_did.str())
      .text(holder_did.str())
      .fixed(commitment_root)
      .u64(issuance_time)
      .take();
}

}  // namespace ssi
