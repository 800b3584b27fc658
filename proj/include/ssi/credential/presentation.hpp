#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssi/credential/credential.hpp"

namespace ssi {

struct RevealedAttribute {
  std::string name;
  std::string value;
  Salt salt;
  MerklePath merkle_path;

  friend bool operator==(const RevealedAttribute&, const RevealedAttribute&) = default;
};

/// Challenge-bound view of a credential. Carries the commitment root and
/// issuance time so the copied issuer signature can be checked; values
/// and salts of unrevealed attributes are absent.
struct Presentation {
  Hash256 credential_id;
  Hash256 schema_id;
  Did issuer_did;
  Did holder_did;
  Hash256 commitment_root;
  std::uint64_t issuance_time = 0;
  std::vector<RevealedAttribute> revealed;
  Signature issuer_signature;
  Challenge challenge;
  Signature holder_signature;

  Hash256 revealed_digest() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Bytes the holder signs: (credential_id, revealed digest, challenge).
Bytes holder_signing_payload(const Hash256& credential_id, const Hash256& revealed_digest,
                             const Challenge& challenge);

}  // namespace ssi
