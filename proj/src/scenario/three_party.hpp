#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssi/credential/credential.hpp"
#include "ssi/scenario/transcript.hpp"

namespace ssi::detail {

/// Issuer, holder and verifier over one ledger and one message bus, run as
/// six steps: request, anchor, issue, present, verify, respond.
struct ThreePartySpec {
  std::string scenario_name;
  std::string holder_role;
  std::string issuer_role;
  std::string verifier_role;
  std::string schema_name;
  std::vector<Attribute> attributes;
  std::set<std::string> reveal;
  std::string present_action;
  std::string grant_action;
  std::string deny_action;

  Seed seed;
  std::uint64_t clock_start = 0;
  bool revoke_before_presentation = false;
  std::optional<std::string> tamper_attribute;
};

ScenarioTranscript run_three_party(const ThreePartySpec& spec);

}  // namespace ssi::detail
