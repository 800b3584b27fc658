#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssi/core/canonical.hpp"
#include "ssi/core/json_codec.hpp"
#include "ssi/identity/did.hpp"

namespace ssi {

/// Attribute layout of a credential type. The id is a hash over the
/// issuer, name, version and attribute names, so identical names from two
/// issuers never collide.
struct CredentialSchema {
  Hash256 schema_id;
  Did issuer_did;
  std::string name;
  std::uint64_t version = 0;
  std::vector<std::string> attribute_names;

  /// Nonempty, unique attribute names and a schema_id that recomputes.
  bool well_formed() const;

  friend bool operator==(const CredentialSchema&, const CredentialSchema&) = default;
};

Hash256 compute_schema_id(const Did& issuer_did, std::string_view name, std::uint64_t version,
                          const std::vector<std::string>& attribute_names);

/// Builds a schema and validates the attribute list. Throws
/// ErrorCode::DuplicateAttribute for an empty or repeating list.
CredentialSchema make_schema(const Did& issuer_did, std::string name, std::uint64_t version,
                             std::vector<std::string> attribute_names);

void append_canonical(CanonicalWriter& w, const CredentialSchema& schema);

json::Json to_json(const CredentialSchema& schema);
CredentialSchema schema_from_json(const json::Json& value);

}  // namespace ssi
