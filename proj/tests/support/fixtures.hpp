#pragma once

#include <cstdint>
#include <vector>

#include "ssi/credential/engine.hpp"
#include "ssi/ledger/ledger.hpp"

namespace ssi::test {

/// Reproducible seed for test actor `n`.
Seed seed_of(std::uint64_t n);

/// One-writer ledger with a session that seals a block per submission.
/// Holds references into itself, so it stays where it was built.
struct World {
  explicit World(std::uint64_t seed = 1, LedgerMode mode = LedgerMode::PublicPermissioned);
  World(const World&) = delete;
  World& operator=(const World&) = delete;

  /// Creates an identity from `seed` and registers its DID document.
  Identity enroll(std::uint64_t seed);

  LogicalClock clock;
  Writer writer;
  Ledger ledger;
  LedgerSession session;
};

/// A ledger built from a random mix of registrations, re-registrations,
/// schema definitions, issuances and revocations, including attempts the
/// registry must refuse. Lists everything an oracle might be asked about.
struct RandomLedger {
  std::unique_ptr<World> world;
  std::vector<Did> dids;
  std::vector<Hash256> schema_ids;
  std::vector<Hash256> credential_ids;
  std::size_t refused = 0;
};

RandomLedger build_random_ledger(std::uint64_t seed, std::size_t operations);

}  // namespace ssi::test
