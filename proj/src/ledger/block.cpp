#include "ssi/ledger/block.hpp"

#include "ssi/core/canonical.hpp"

namespace ssi {

Hash256 compute_tx_root(std::span<const RegistryTransaction> transactions) {
  Bytes concatenated;
  concatenated.reserve(transactions.size() * Hash256::size_bytes);
  for (const auto& tx : transactions) {
    Hash256 h = tx.hash();
    concatenated.insert(concatenated.end(), h.bytes.begin(), h.bytes.end());
  }
  return sha256(concatenated);
}

Hash256 compute_block_hash(std::uint64_t index, const Hash256& prev_hash, std::uint64_t timestamp,
                           const Hash256& tx_root) {
  return sha256(CanonicalWriter("ssi/block/v1")
                    .u64(index)
                    .fixed(prev_hash)
                    .u64(timestamp)
                    .fixed(tx_root)
                    .data());
}

LedgerBlock seal_block(std::uint64_t index, const Hash256& prev_hash, std::uint64_t timestamp,
                       std::vector<RegistryTransaction> transactions, const Identity& writer) {
  Hash256 tx_root = compute_tx_root(transactions);
  Hash256 block_hash = compute_block_hash(index, prev_hash, timestamp, tx_root);
  return LedgerBlock{
      .index = index,
      .prev_hash = prev_hash,
      .timestamp = timestamp,
      .transactions = std::move(transactions),
      .tx_root = tx_root,
      .block_hash = block_hash,
      .writer_did = writer.did,
      .writer_signature = sign(writer.keys.private_key, block_hash.view()),
  };
}

json::Json to_json(const LedgerBlock& block) {
  json::Json txs = json::Json::array();
  for (const auto& tx : block.transactions) txs.push_back(to_json(tx));
  return {
      {"index", block.index},
      {"prev_hash", to_hex(block.prev_hash)},
      {"timestamp", block.timestamp},
      {"transactions", std::move(txs)},
      {"tx_root", to_hex(block.tx_root)},
      {"block_hash", to_hex(block.block_hash)},
      {"writer_did", block.writer_did.str()},
      {"writer_signature", to_hex(block.writer_signature)},
  };
}

LedgerBlock block_from_json(const json::Json& value) {
  std::vector<RegistryTransaction> txs;
  for (const auto& tx : json::get_array(value, "transactions")) {
    txs.push_back(transaction_from_json(tx));
  }
  return LedgerBlock{
      .index = json::get_u64(value, "index"),
      .prev_hash = json::get_fixed<Hash256>(value, "prev_hash"),
      .timestamp = json::get_u64(value, "timestamp"),
      .transactions = std::move(txs),
      .tx_root = json::get_fixed<Hash256>(value, "tx_root"),
      .block_hash = json::get_fixed<Hash256>(value, "block_hash"),
      .writer_did = get_did(value, "writer_did"),
      .writer_signature = json::get_fixed<Signature>(value, "writer_signature"),
  };
}

}  // namespace ssi
