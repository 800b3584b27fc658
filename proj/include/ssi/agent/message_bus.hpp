#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssi/core/json_codec.hpp"
#include "ssi/identity/did.hpp"

namespace ssi {

class Agent;

enum class MessageKind {
  CredentialRequest,
  Credential,
  PresentationRequest,
  Presentation,
  AuthChallenge,
  AuthResponse,
  AccessGrant,
};

std::string_view to_string(MessageKind kind) noexcept;

struct Message {
  Did from;
  Did to;
  MessageKind kind;
  Bytes payload;
};

struct TranscriptEntry {
  std::uint64_t step = 0;
  Did from_did;
  Did to_did;
  MessageKind kind;
  Hash256 payload_hash;
};

json::Json to_json(const TranscriptEntry& entry);

/// In-process transport keyed by DID. Delivery appends to the recipient's
/// FIFO inbox and records one transcript entry per message.
class MessageBus {
 public:
  /// The agent must outlive the bus or be detached first.
  void attach(Agent& agent);
  void detach(const Did& did);

  /// Throws Undeliverable when no agent is attached under `message.to`.
  void deliver(Message message);

  const std::vector<TranscriptEntry>& transcript() const noexcept { return transcript_; }
  const std::vector<Message>& log() const noexcept { return log_; }

  /// One compact JSON object per line.
  std::string transcript_jsonl() const;

 private:
  std::map<Did, Agent*> agents_;
  std::vector<TranscriptEntry> transcript_;
  std::vector<Message> log_;
};

}  // namespace ssi
