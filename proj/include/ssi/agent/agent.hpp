#pragma once

#include <deque>
#include <optional>

#include "ssi/agent/did_auth.hpp"
#include "ssi/agent/message_bus.hpp"
#include "ssi/agent/wallet.hpp"
#include "ssi/credential/engine.hpp"

namespace ssi {

struct ReceivedCredential {
  Did sender;
  Credential credential;
  VerificationReport report;
  /// Accepted and held by the receiving agent, so now in its wallet.
  bool stored = false;
};

/// Acts for one wallet: resolves peers on the ledger, exchanges encrypted
/// envelopes, and runs DID-Auth. Outgoing payloads never carry secret key
/// material.
class Agent {
 public:
  Agent(Wallet wallet, const Ledger& ledger,
        std::uint64_t challenge_ttl = DidAuthVerifier::kDefaultTtl);

  const Did& did() const noexcept { return wallet_.did(); }
  Wallet& wallet() noexcept { return wallet_; }
  const Wallet& wallet() const noexcept { return wallet_; }

  /// Ledger read handle, reading as this agent's DID.
  RegistryView registry() const { return ledger_->view(did()); }

  void enqueue(Message message) { inbox_.push_back(std::move(message)); }
  std::size_t inbox_size() const noexcept { return inbox_.size(); }
  std::optional<Message> next_message();

  /// Encrypts to the recipient's ledger-resolved key-agreement key and
  /// delivers. Throws UnknownDid before anything is sent.
  Envelope send_credential(const Did& recipient, const Credential& credential, MessageBus& bus,
                           RandomSource& rng);

  /// Decrypts, parses and verifies against the registry. Accepted
  /// credentials held by this agent are stored in the wallet. Throws
  /// AuthFailure or ParseError.
  ReceivedCredential receive_credential(const Message& message);

  Envelope send_presentation(const Did& recipient, const Presentation& presentation,
                             MessageBus& bus, RandomSource& rng);
  Presentation open_presentation(const Message& message);

  /// Sends `payload` as an envelope of the given kind.
  Envelope send_sealed(const Did& recipient, MessageKind kind, ByteView payload, MessageBus& bus,
                       RandomSource& rng);
  /// Decrypts a message sent with send_sealed. Throws AuthFailure.
  Bytes open_sealed(const Message& message) const;

  AuthChallenge did_auth_challenge(const Did& subject, RandomSource& rng,
                                   const LogicalClock& clock);
  AuthResponse did_auth_respond(const AuthChallenge& challenge) const;
  bool did_auth_check(const AuthResponse& response, const LogicalClock& clock);

 private:
  Wallet wallet_;
  const Ledger* ledger_;
  std::deque<Message> inbox_;
  DidAuthVerifier auth_;
};

}  // namespace ssi
