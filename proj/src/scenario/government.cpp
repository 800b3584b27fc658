#include "ssi/scenario/government.hpp"

#include "three_party.hpp"

namespace ssi {

const std::vector<std::string>& government_attributes() {
  static const std::vector<std::string> names{
      "name",         "date_of_birth", "gender",      "address",           "mobile_number",
      "email",        "fingerprints",  "iris_scans",  "facial_photograph",
  };
  return names;
}

ScenarioTranscript run_government_scenario(const GovernmentConfig& config) {
  detail::ThreePartySpec spec{
      .scenario_name = "government",
      .holder_role = "resident",
      .issuer_role = "enrolment-authority",
      .verifier_role = "employer",
      .schema_name = "national-identity",
      .attributes =
          {
              {"name", "Asha Rao"},
              {"date_of_birth", "1988-04-12"},
              {"gender", "female"},
              {"address", "12 MG Road, Bengaluru 560001"},
              {"mobile_number", "+91-98450-01234"},
              {"email", "asha.rao@example.in"},
              {"fingerprints", "biometric:fingerprints:7f3a9c0e5b21d846"},
              {"iris_scans", "biometric:iris:c41e08a27d9b3f65"},
              {"facial_photograph", "biometric:face:2b8d6e1f90a4c357"},
          },
      .reveal = config.reveal,
      .present_action = "present-credential",
      .grant_action = "accept-identity",
      .deny_action = "refuse-identity",
      .seed = config.seed,
      .clock_start = config.clock_start,
      .revoke_before_presentation = false,
      .tamper_attribute = std::nullopt,
  };
  if (spec.reveal.empty()) spec.reveal = {"name", "date_of_birth"};
  return detail::run_three_party(spec);
}

}  // namespace ssi
