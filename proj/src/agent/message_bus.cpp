#include "ssi/agent/message_bus.hpp"

#include "ssi/agent/agent.hpp"

namespace ssi {

std::string_view to_string(MessageKind kind) noexcept {
  switch (kind) {
    case MessageKind::CredentialRequest: return "credential-request";
    case MessageKind::Credential: return "credential";
    case MessageKind::PresentationRequest: return "presentation-request";
    case MessageKind::Presentation: return "presentation";
    case MessageKind::AuthChallenge: return "auth-challenge";
    case MessageKind::AuthResponse: return "auth-response";
    case MessageKind::AccessGrant: return "access-grant";
  }
  return "unknown";
}

json::Json to_json(const TranscriptEntry& entry) {
  return {
      {"step", entry.step},
      {"from_did", entry.from_did.str()},
      {"to_did", entry.to_did.str()},
      {"kind", to_string(entry.kind)},
      {"payload_hash", to_hex(entry.payload_hash)},
  };
}

void MessageBus::attach(Agent& agent) { agents_.insert_or_assign(agent.did(), &agent); }

void MessageBus::detach(const Did& did) { agents_.erase(did); }

void MessageBus::deliver(Message message) {
  auto it = agents_.find(message.to);
  if (it == agents_.end()) {
    throw Error(ErrorCode::Undeliverable, "no agent attached for " + message.to.str());
  }
  transcript_.push_back(TranscriptEntry{transcript_.size() + 1, message.from, message.to,
                                        message.kind, sha256(message.payload)});
  log_.push_back(message);
  it->second->enqueue(std::move(message));
}

std::string MessageBus::transcript_jsonl() const {
  std::string out;
  for (const auto& entry : transcript_) out += to_json(entry).dump() + "\n";
  return out;
}

}  // namespace ssi
