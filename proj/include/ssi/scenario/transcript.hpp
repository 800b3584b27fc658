#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssi/core/json_codec.hpp"
#include "ssi/core/random.hpp"
#include "ssi/identity/did.hpp"

namespace ssi {

/// Accept, or Reject naming the first failing check.
struct Verdict {
  bool accepted = false;
  std::string cause;

  static Verdict accept() { return {true, {}}; }
  static Verdict reject(std::string cause) { return {false, std::move(cause)}; }

  /// "accept" or "reject(<cause>)".
  std::string str() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ScenarioStep {
  std::uint64_t step_number = 0;
  std::string actor;
  Did actor_did;
  std::string action;
  Hash256 payload_hash;
  std::string outcome;
  /// Plaintext the step transmitted or recorded; only its hash is serialized.
  Bytes payload;
};

struct ScenarioTranscript {
  std::string scenario_name;
  std::vector<ScenarioStep> steps;
  Verdict final_verdict;
  std::vector<std::string> revealed;

  const ScenarioStep& append(std::string actor, const Did& actor_did, std::string action,
                             Bytes payload, std::string outcome);
  /// Step numbers run 1, 2, 3, ... with no gaps.
  bool contiguous() const;
};

json::Json to_json(const ScenarioTranscript& transcript);
/// Canonical JSON text; byte-stable for a fixed seed and clock start.
std::string serialize_transcript(const ScenarioTranscript& transcript);

/// Per-actor seed derived from the run's single master seed.
Seed derive_actor_seed(const Seed& master, std::string_view role);

}  // namespace ssi
