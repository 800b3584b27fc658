#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssi/ledger/transaction.hpp"

namespace ssi {

struct LedgerBlock {
  std::uint64_t index = 0;
  Hash256 prev_hash;
  std::uint64_t timestamp = 0;
  std::vector<RegistryTransaction> transactions;
  Hash256 tx_root;
  Hash256 block_hash;
  Did writer_did;
  Signature writer_signature;

  friend bool operator==(const LedgerBlock&, const LedgerBlock&) = default;
};

/// SHA-256 over the concatenated transaction hashes.
Hash256 compute_tx_root(std::span<const RegistryTransaction> transactions);

/// SHA-256 over the canonical (index, prev_hash, timestamp, tx_root).
Hash256 compute_block_hash(std::uint64_t index, const Hash256& prev_hash, std::uint64_t timestamp,
                           const Hash256& tx_root);

/// Computes the roots and signs the block hash. Performs no admission
/// checks; Ledger::append_block is the checked path.
LedgerBlock seal_block(std::uint64_t index, const Hash256& prev_hash, std::uint64_t timestamp,
                       std::vector<RegistryTransaction> transactions, const Identity& writer);

json::Json to_json(const LedgerBlock& block);
LedgerBlock block_from_json(const json::Json& value);

}  // namespace ssi
