#pragma once

#include <cstdint>
#include <map>

#include "ssi/core/clock.hpp"
#include "ssi/core/json_codec.hpp"
#include "ssi/core/random.hpp"
#include "ssi/ledger/ledger.hpp"

namespace ssi {

struct AuthChallenge {
  Did verifier_did;
  Did subject_did;
  Challenge nonce;
  std::uint64_t issued_at = 0;

  friend bool operator==(const AuthChallenge&, const AuthChallenge&) = default;
};

struct AuthResponse {
  Did subject_did;
  Did verifier_did;
  Challenge nonce;
  Signature signature;

  friend bool operator==(const AuthResponse&, const AuthResponse&) = default;
};

/// Bytes the subject signs: (nonce, verifier_did).
Bytes did_auth_payload(const Challenge& nonce, const Did& verifier_did);

AuthResponse did_auth_respond(const Identity& subject, const AuthChallenge& challenge);

/// Verifier-side DID-Auth session: outstanding nonces, each single-use.
class DidAuthVerifier {
 public:
  static constexpr std::uint64_t kDefaultTtl = 100;

  explicit DidAuthVerifier(Did verifier_did, std::uint64_t ttl_ticks = kDefaultTtl)
      : verifier_did_(std::move(verifier_did)), ttl_(ttl_ticks) {}

  AuthChallenge issue(const Did& subject_did, RandomSource& rng, const LogicalClock& clock);

  /// True iff the nonce is outstanding, the response names the challenged
  /// subject and this verifier, and the signature verifies under the
  /// subject's registered key. The nonce is consumed by any attempt that
  /// names it. Throws StaleChallenge once older than the TTL and UnknownDid
  /// when the subject is not registered.
  bool check(const AuthResponse& response, const RegistryView& registry,
             const LogicalClock& clock);

  std::size_t outstanding() const noexcept { return pending_.size(); }
  std::uint64_t ttl() const noexcept { return ttl_; }

 private:
  Did verifier_did_;
  std::uint64_t ttl_;
  std::map<Challenge, AuthChallenge> pending_;
};

json::Json to_json(const AuthChallenge& challenge);
AuthChallenge auth_challenge_from_json(const json::Json& value);
json::Json to_json(const AuthResponse& response);
AuthResponse auth_response_from_json(const json::Json& value);

}  // namespace ssi
