#include "ssi/credential/presentation.hpp"

#include "ssi/core/canonical.hpp"
#include "ssi/identity/crypto.hpp"

namespace ssi {

Hash256 Presentation::revealed_digest() const {
  CanonicalWriter w("ssi/revealed-set/v1");
  w.count(revealed.size());
  for (const auto& r : revealed) {
    w.text(r.name).text(r.value).fixed(r.salt).u64(r.merkle_path.leaf_index);
    w.count(r.merkle_path.siblings.size());
    for (const auto& s : r.merkle_path.siblings) w.fixed(s);
  }
  return sha256(w.data());
}

Bytes holder_signing_payload(const Hash256& credential_id, const Hash256& revealed_digest,
                             const Challenge& challenge) {
  return CanonicalWriter("ssi/presentation/v1")
      .fixed(credential_id)
      .fixed(revealed_digest)
      .fixed(challenge)
      .take();
}

}  // namespace ssi
