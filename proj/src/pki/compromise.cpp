#include "ssi/pki/compromise.hpp"

#include "ssi/core/error.hpp"
#include "ssi/core/random.hpp"
#include "ssi/ledger/ledger.hpp"
#include "ssi/pki/pki.hpp"

namespace ssi {
namespace {

constexpr const char* kVictimName = "bank.example";
constexpr std::size_t kVictimDids = 4;

CompromiseReport run_ca(const CompromiseConfig& config) {
  SeededRandom rng(config.seed);
  LogicalClock clock;
  CaHierarchy pki = CaHierarchy::create(rng.draw<Seed>(), clock);

  KeyPair victim = generate_keypair(rng.draw<Seed>());
  Approval approval = pki.ra_approve(pki.submit_csr(make_csr(kVictimName, victim)));
  pki.ca_issue(approval, clock);

  CompromiseReport report{.scenario = CompromiseScenario::CaCompromise,
                          .writers = pki.subordinates().size(),
                          .compromised = 1,
                          .total_forgeries = config.forgeries};
  const std::string issuing_ca = pki.subordinates().front().name;
  for (std::uint64_t i = 0; i < config.forgeries; ++i) {
    KeyPair attacker = generate_keypair(rng.draw<Seed>());
    Certificate forged = pki.issue_as(issuing_ca, kVictimName, attacker.public_key, clock);
    if (pki.verify_certificate(forged, clock).valid()) {
      ++report.forged_accepted;
    } else {
      ++report.forged_rejected;
    }
  }
  return report;
}

// A registration for `target` that the target's key never signed. Even
// forgeries keep the target's key but carry an attacker signature; odd
// ones swap in the attacker's key.
RegistryTransaction forge_registration(const DidDocument& target, const Identity& attacker,
                                       std::uint64_t i, std::uint64_t created_at) {
  DidDocument doc = target;
  doc.service_endpoints = {{"login", "https://attacker.example/" + std::to_string(i)}};
  doc.created_at = created_at;
  doc.key_agreement_key = attacker.keys.agreement_public_key;
  if (i % 2 == 1) doc.verification_key = attacker.keys.public_key;
  doc.controller_signature = sign(attacker.keys.private_key, doc.signing_payload());
  return sign_transaction(RegisterDid{doc}, attacker.keys);
}

CompromiseReport run_ledger(const CompromiseConfig& config) {
  if (config.writers == 0) throw Error(ErrorCode::BadConfig, "writer set must be non-empty");
  if (config.compromised > config.writers) {
    throw Error(ErrorCode::BadConfig, "cannot compromise more writers than exist");
  }
  SeededRandom rng(config.seed);
  LogicalClock clock;

  std::vector<Writer> writers;
  for (std::uint64_t i = 0; i < config.writers; ++i) {
    writers.push_back(Writer::create(rng.draw<Seed>(), clock.now()));
  }
  Ledger ledger = Ledger::genesis(writers, clock);

  LedgerSession honest(ledger, writers.back().identity, clock);
  std::vector<DidDocument> victims;
  for (std::size_t i = 0; i < kVictimDids; ++i) {
    Identity victim = Identity::from_seed(rng.draw<Seed>());
    DidDocument doc = make_did_document(victim, {{"login", "https://victim.example"}}, clock.now());
    honest.submit(make_register_did(victim, doc));
    victims.push_back(std::move(doc));
  }

  std::vector<Identity> sealers;
  for (std::uint64_t i = 0; i < config.compromised; ++i) sealers.push_back(writers[i].identity);
  if (sealers.empty()) sealers.push_back(Identity::from_seed(rng.draw<Seed>()));

  CompromiseReport report{.scenario = CompromiseScenario::LedgerWriterCompromise,
                          .writers = config.writers,
                          .compromised = config.compromised,
                          .total_forgeries = config.forgeries};
  for (std::uint64_t i = 0; i < config.forgeries; ++i) {
    const DidDocument& target = victims[i % victims.size()];
    Identity attacker = Identity::from_seed(rng.draw<Seed>());
    RegistryTransaction tx = forge_registration(target, attacker, i, clock.now() + 1);

    // Compromised writers bypass their own admission checks and seal the
    // block directly; acceptance is decided by everyone else's validation.
    std::vector<LedgerBlock> blocks = ledger.blocks();
    const LedgerBlock& tip = blocks.back();
    blocks.push_back(seal_block(tip.index + 1, tip.block_hash, clock.tick(), {tx},
                                sealers[i % sealers.size()]));

    bool accepted = false;
    try {
      Ledger forged = Ledger::from_blocks(std::move(blocks), ledger.mode());
      accepted = forged.resolve_did(target.did) == std::get<RegisterDid>(tx.body).did_document;
    } catch (const ChainValidationError&) {
      accepted = false;
    }
    accepted ? ++report.forged_accepted : ++report.forged_rejected;
  }
  return report;
}

}  // namespace

std::string_view to_string(CompromiseScenario scenario) noexcept {
  switch (scenario) {
    case CompromiseScenario::CaCompromise: return "ca-compromise";
    case CompromiseScenario::LedgerWriterCompromise: return "ledger-writer-compromise";
  }
  return "unknown";
}

CompromiseScenario parse_compromise_scenario(std::string_view text) {
  if (text == "ca" || text == "ca-compromise") return CompromiseScenario::CaCompromise;
  if (text == "ledger" || text == "ledger-writer-compromise") {
    return CompromiseScenario::LedgerWriterCompromise;
  }
  throw Error(ErrorCode::BadConfig, "unknown scenario '" + std::string(text) + "'");
}

json::Json to_json(const CompromiseReport& report) {
  return {{"scenario", to_string(report.scenario)},
          {"compromised", report.compromised},
          {"writers", report.writers},
          {"forged_accepted", report.forged_accepted},
          {"forged_rejected", report.forged_rejected},
          {"total_forgeries", report.total_forgeries}};
}

CompromiseReport run_compromise_experiment(const CompromiseConfig& config) {
  return config.scenario == CompromiseScenario::CaCompromise ? run_ca(config)
                                                              : run_ledger(config);
}

}  // namespace ssi
