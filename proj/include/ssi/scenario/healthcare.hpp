#pragma once

#include <optional>
#include <set>
#include <string>

#include "ssi/scenario/transcript.hpp"

namespace ssi {

struct HealthcareConfig {
  Seed seed;
  std::uint64_t clock_start = 0;
  /// Attributes the patient discloses to the provider; empty means all.
  std::set<std::string> reveal;
  bool revoke_before_presentation = false;
  /// Alters this revealed value after the patient signs the presentation.
  std::optional<std::string> tamper_attribute;
};

/// Attribute names of the health credential, in schema order.
const std::vector<std::string>& healthcare_attributes();

/// Patient, issuer-authority and provider walk through the six steps:
/// request, anchor, issue, request access, verify, grant. Throws
/// ConfigError for a tamper target that is unknown or not revealed, and
/// UnknownAttribute when `reveal` names an attribute the credential lacks.
ScenarioTranscript run_healthcare_scenario(const HealthcareConfig& config);

}  // namespace ssi
