#include "ssi/scenario/healthcare.hpp"

#include "three_party.hpp"

namespace ssi {

const std::vector<std::string>& healthcare_attributes() {
  static const std::vector<std::string> names{"name", "dob", "patient_number"};
  return names;
}

ScenarioTranscript run_healthcare_scenario(const HealthcareConfig& config) {
  detail::ThreePartySpec spec{
      .scenario_name = "healthcare",
      .holder_role = "patient",
      .issuer_role = "issuer-authority",
      .verifier_role = "provider",
      .schema_name = "PatientID",
      .attributes = {{"name", "Alice Example"}, {"dob", "1990-01-01"},
                     {"patient_number", "PN-000123"}},
      .reveal = config.reveal,
      .present_action = "request-access",
      .grant_action = "grant-access",
      .deny_action = "deny-access",
      .seed = config.seed,
      .clock_start = config.clock_start,
      .revoke_before_presentation = config.revoke_before_presentation,
      .tamper_attribute = config.tamper_attribute,
  };
  if (spec.reveal.empty()) {
    spec.reveal.insert(healthcare_attributes().begin(), healthcare_attributes().end());
  }
  return detail::run_three_party(spec);
}

}  // namespace ssi
