#include "ssi/agent/agent.hpp"

#include "ssi/credential/credential_json.hpp"

namespace ssi {

Agent::Agent(Wallet wallet, const Ledger& ledger, std::uint64_t challenge_ttl)
    : wallet_(std::move(wallet)), ledger_(&ledger), auth_(wallet_.did(), challenge_ttl) {}

std::optional<Message> Agent::next_message() {
  if (inbox_.empty()) return std::nullopt;
  Message front = std::move(inbox_.front());
  inbox_.pop_front();
  return front;
}

Envelope Agent::send_sealed(const Did& recipient, MessageKind kind, ByteView payload,
                            MessageBus& bus, RandomSource& rng) {
  DidDocument doc = registry().resolve_did(recipient);
  Envelope envelope = encrypt_for(doc.key_agreement_key, wallet_.keypair(), payload, rng);
  bus.deliver(Message{did(), recipient, kind, serialize_envelope(envelope)});
  return envelope;
}

Bytes Agent::open_sealed(const Message& message) const {
  DidDocument sender = registry().resolve_did(message.from);
  return decrypt(wallet_.keypair(), sender.key_agreement_key, parse_envelope(message.payload));
}

Envelope Agent::send_credential(const Did& recipient, const Credential& credential,
                                MessageBus& bus, RandomSource& rng) {
  std::string body = serialize_credential(credential);
  return send_sealed(recipient, MessageKind::Credential, as_bytes(body), bus, rng);
}

ReceivedCredential Agent::receive_credential(const Message& message) {
  if (message.kind != MessageKind::Credential) {
    throw Error(ErrorCode::ParseError, "message is a " + std::string(to_string(message.kind)));
  }
  Bytes plaintext = open_sealed(message);
  Credential credential =
      parse_credential(std::string_view(reinterpret_cast<const char*>(plaintext.data()),
                                        plaintext.size()));
  VerificationReport report = verify_credential(registry(), credential);

  bool stored = false;
  if (report.accepted() && credential.holder_did == did() &&
      !wallet_.find_credential(credential.credential_id)) {
    wallet_.add_credential(credential);
    stored = true;
  }
  return ReceivedCredential{message.from, std::move(credential), std::move(report), stored};
}

Envelope Agent::send_presentation(const Did& recipient, const Presentation& presentation,
                                  MessageBus& bus, RandomSource& rng) {
  std::string body = serialize_presentation(presentation);
  return send_sealed(recipient, MessageKind::Presentation, as_bytes(body), bus, rng);
}

Presentation Agent::open_presentation(const Message& message) {
  if (message.kind != MessageKind::Presentation) {
    throw Error(ErrorCode::ParseError, "message is a " + std::string(to_string(message.kind)));
  }
  Bytes plaintext = open_sealed(message);
  return parse_presentation(
      std::string_view(reinterpret_cast<const char*>(plaintext.data()), plaintext.size()));
}

AuthChallenge Agent::did_auth_challenge(const Did& subject, RandomSource& rng,
                                        const LogicalClock& clock) {
  return auth_.issue(subject, rng, clock);
}

AuthResponse Agent::did_auth_respond(const AuthChallenge& challenge) const {
  return ssi::did_auth_respond(wallet_.identity(), challenge);
}

bool Agent::did_auth_check(const AuthResponse& response, const LogicalClock& clock) {
  return auth_.check(response, registry(), clock);
}

}  // namespace ssi
