#include "ssi/scenario/transcript.hpp"

#include "ssi/core/canonical.hpp"
#include "ssi/identity/crypto.hpp"

namespace ssi {

std::string Verdict::str() const { return accepted ? "accept" : "reject(" + cause + ")"; }

const ScenarioStep& ScenarioTranscript::append(std::string actor, const Did& actor_did,
                                               std::string action, Bytes payload,
                                               std::string outcome) {
  ScenarioStep step{
      .step_number = steps.size() + 1,
      .actor = std::move(actor),
      .actor_did = actor_did,
      .action = std::move(action),
      .payload_hash = sha256(payload),
      .outcome = std::move(outcome),
      .payload = std::move(payload),
  };
  steps.push_back(std::move(step));
  return steps.back();
}

bool ScenarioTranscript::contiguous() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].step_number != i + 1) return false;
  }
  return true;
}

json::Json to_json(const ScenarioTranscript& transcript) {
  json::Json steps = json::Json::array();
  for (const auto& s : transcript.steps) {
    steps.push_back({{"step_number", s.step_number},
                     {"actor", s.actor},
                     {"actor_did", s.actor_did.str()},
                     {"action", s.action},
                     {"payload_hash", to_hex(s.payload_hash)},
                     {"outcome", s.outcome}});
  }
  json::Json verdict = {{"verdict", transcript.final_verdict.accepted ? "accept" : "reject"}};
  if (transcript.final_verdict.accepted) {
    verdict["cause"] = nullptr;
  } else {
    verdict["cause"] = transcript.final_verdict.cause;
  }
  return {{"scenario", transcript.scenario_name},
          {"steps", std::move(steps)},
          {"revealed", transcript.revealed},
          {"final_verdict", std::move(verdict)}};
}

std::string serialize_transcript(const ScenarioTranscript& transcript) {
  return json::dump_canonical(to_json(transcript));
}

Seed derive_actor_seed(const Seed& master, std::string_view role) {
  return Seed::from(
      sha256(CanonicalWriter("ssi/scenario-actor/v1").fixed(master).text(role).data()).view());
}

}  // namespace ssi
