#pragma once

#include <set>
#include <string>
#include <vector>

#include "ssi/scenario/transcript.hpp"

namespace ssi {

struct GovernmentConfig {
  Seed seed;
  std::uint64_t clock_start = 0;
  /// Attributes the resident discloses to the employer; empty means
  /// {name, date_of_birth}.
  std::set<std::string> reveal;
};

/// The nine demographic and biometric attributes of the national identity
/// credential, in schema order. Biometrics are opaque strings.
const std::vector<std::string>& government_attributes();

/// Resident obtains the identity credential from the enrolment authority
/// and proves a subset of it to an employer. Throws UnknownAttribute when
/// `reveal` names an attribute outside the schema.
ScenarioTranscript run_government_scenario(const GovernmentConfig& config);

}  // namespace ssi
