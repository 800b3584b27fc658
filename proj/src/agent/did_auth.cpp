#include "ssi/agent/did_auth.hpp"

#include "ssi/core/canonical.hpp"

namespace ssi {

Bytes did_auth_payload(const Challenge& nonce, const Did& verifier_did) {
  return CanonicalWriter("ssi/did-auth/v1").fixed(nonce).text(verifier_did.str()).take();
}

AuthResponse did_auth_respond(const Identity& subject, const AuthChallenge& challenge) {
  return AuthResponse{
      subject.did,
      challenge.verifier_did,
      challenge.nonce,
      sign(subject.keys.private_key, did_auth_payload(challenge.nonce, challenge.verifier_did)),
  };
}

AuthChallenge DidAuthVerifier::issue(const Did& subject_did, RandomSource& rng,
                                     const LogicalClock& clock) {
  Challenge nonce = rng.draw<Challenge>();
  while (pending_.contains(nonce)) nonce = rng.draw<Challenge>();
  AuthChallenge challenge{verifier_did_, subject_did, nonce, clock.now()};
  pending_.emplace(nonce, challenge);
  return challenge;
}

bool DidAuthVerifier::check(const AuthResponse& response, const RegistryView& registry,
                            const LogicalClock& clock) {
  auto it = pending_.find(response.nonce);
  if (it == pending_.end()) return false;
  AuthChallenge challenge = it->second;
  pending_.erase(it);

  if (clock.now() > challenge.issued_at && clock.now() - challenge.issued_at > ttl_) {
    throw Error(ErrorCode::StaleChallenge, "challenge issued at tick " +
                                               std::to_string(challenge.issued_at) + " expired");
  }
  if (response.subject_did != challenge.subject_did || response.verifier_did != verifier_did_) {
    return false;
  }
  DidDocument subject = registry.resolve_did(response.subject_did);
  return verify(subject.verification_key, did_auth_payload(response.nonce, verifier_did_),
                response.signature);
}

json::Json to_json(const AuthChallenge& c) {
  return {
      {"verifier_did", c.verifier_did.str()},
      {"subject_did", c.subject_did.str()},
      {"nonce", to_hex(c.nonce)},
      {"issued_at", c.issued_at},
  };
}

AuthChallenge auth_challenge_from_json(const json::Json& value) {
  return AuthChallenge{get_did(value, "verifier_did"), get_did(value, "subject_did"),
                       json::get_fixed<Challenge>(value, "nonce"),
                       json::get_u64(value, "issued_at")};
}

json::Json to_json(const AuthResponse& r) {
  return {
      {"subject_did", r.subject_did.str()},
      {"verifier_did", r.verifier_did.str()},
      {"nonce", to_hex(r.nonce)},
      {"signature", to_hex(r.signature)},
  };
}

AuthResponse auth_response_from_json(const json::Json& value) {
  return AuthResponse{get_did(value, "subject_did"), get_did(value, "verifier_did"),
                      json::get_fixed<Challenge>(value, "nonce"),
                      json::get_fixed<Signature>(value, "signature")};
}

}  // namespace ssi
