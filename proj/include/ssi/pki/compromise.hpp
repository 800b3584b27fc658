#pragma once

#include <cstdint>
#include <string>

#include "ssi/core/json_codec.hpp"
#include "ssi/core/random.hpp"

namespace ssi {

enum class CompromiseScenario { CaCompromise, LedgerWriterCompromise };

std::string_view to_string(CompromiseScenario scenario) noexcept;
/// Accepts "ca" / "ca-compromise" and "ledger" / "ledger-writer-compromise".
/// Throws BadConfig otherwise.
CompromiseScenario parse_compromise_scenario(std::string_view text);

struct CompromiseConfig {
  CompromiseScenario scenario = CompromiseScenario::CaCompromise;
  std::uint64_t forgeries = 0;
  /// Ledger scenario only: writer-set size n and compromised writers k.
  /// k = 0 models an outsider holding no writer key.
  std::uint64_t writers = 3;
  std::uint64_t compromised = 1;
  Seed seed;
};

struct CompromiseReport {
  CompromiseScenario scenario = CompromiseScenario::CaCompromise;
  std::uint64_t writers = 0;
  std::uint64_t compromised = 0;
  std::uint64_t forged_accepted = 0;
  std::uint64_t forged_rejected = 0;
  std::uint64_t total_forgeries = 0;
};

json::Json to_json(const CompromiseReport& report);

/// CA scenario: the attacker holds the single issuing CA and mints F
/// certificates for a victim's name under attacker keys; accepted means
/// verify_certificate returns Valid.
///
/// Ledger scenario: the attacker controls k of n writers and appends F
/// blocks, each re-registering an existing DID without the DID's key;
/// accepted means the chain still validates and resolve_did returns the
/// forged document.
///
/// Throws BadConfig when n = 0 or k > n.
CompromiseReport run_compromise_experiment(const CompromiseConfig& config);

}  // namespace ssi
