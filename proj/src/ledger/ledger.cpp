#include "ssi/ledger/ledger.hpp"

#include <algorithm>

namespace ssi {
namespace {

ChainFault classify(ErrorCode code) {
  return code == ErrorCode::BadSignature ? ChainFault::BadSignature
                                         : ChainFault::InvalidTransaction;
}

const WriterEntry* find_writer(const std::vector<WriterEntry>& writers, const Did& did) {
  auto it = std::find_if(writers.begin(), writers.end(),
                         [&](const WriterEntry& w) { return w.did == did; });
  return it == writers.end() ? nullptr : &*it;
}

/// Validates `blocks` and, on success, leaves the replayed registry and
/// the genesis writer set in the out-parameters.
ChainValidation replay(std::span<const LedgerBlock> blocks, RegistryState& state,
                       std::vector<WriterEntry>& writers) {
  auto fail = [](std::size_t index, ChainFault cause, std::string detail) {
    return ChainValidation{FirstInvalid{index, cause, std::move(detail)}};
  };
  if (blocks.empty()) return fail(0, ChainFault::LinkBroken, "chain has no genesis block");

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const LedgerBlock& block = blocks[i];

    if (compute_tx_root(block.transactions) != block.tx_root) {
      return fail(i, ChainFault::HashMismatch, "tx_root does not recompute");
    }
    if (compute_block_hash(block.index, block.prev_hash, block.timestamp, block.tx_root) !=
        block.block_hash) {
      return fail(i, ChainFault::HashMismatch, "block_hash does not recompute");
    }

    const Hash256 expected_prev = i == 0 ? Hash256{} : blocks[i - 1].block_hash;
    if (block.index != i) return fail(i, ChainFault::LinkBroken, "index out of sequence");
    if (block.prev_hash != expected_prev) {
      return fail(i, ChainFault::LinkBroken, "prev_hash does not match predecessor");
    }
    if (i > 0 && block.timestamp < blocks[i - 1].timestamp) {
      return fail(i, ChainFault::LinkBroken, "timestamp regresses");
    }

    if (i == 0) {
      for (const auto& tx : block.transactions) {
        const auto* reg = std::get_if<RegisterDid>(&tx.body);
        if (reg == nullptr) {
          return fail(0, ChainFault::InvalidTransaction, "genesis holds a non-registration");
        }
        writers.push_back({reg->did_document.did, reg->did_document.verification_key});
      }
    }

    const WriterEntry* writer = find_writer(writers, block.writer_did);
    if (writer == nullptr) {
      return fail(i, ChainFault::BadWriter, block.writer_did.str() + " is not a writer");
    }
    if (!verify(writer->verification_key, block.block_hash.view(), block.writer_signature)) {
      return fail(i, ChainFault::BadSignature, "writer signature does not verify");
    }

    if (block.transactions.empty()) {
      return fail(i, ChainFault::InvalidTransaction, "block carries no transactions");
    }
    for (std::size_t t = 0; t < block.transactions.size(); ++t) {
      try {
        state.apply(block.transactions[t]);
      } catch (const Error& e) {
        return fail(i, classify(e.code()), "transaction " + std::to_string(t) + ": " + e.what());
      }
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(LedgerMode mode) noexcept {
  return mode == LedgerMode::PublicPermissioned ? "public-permissioned" : "private-permissioned";
}

std::string_view to_string(ChainFault fault) noexcept {
  switch (fault) {
    case ChainFault::HashMismatch: return "HashMismatch";
    case ChainFault::LinkBroken: return "LinkBroken";
    case ChainFault::BadWriter: return "BadWriter";
    case ChainFault::BadSignature: return "BadSignature";
    case ChainFault::InvalidTransaction: return "InvalidTransaction";
  }
  return "Unknown";
}

Writer Writer::create(const Seed& seed, std::uint64_t created_at,
                      std::vector<ServiceEndpoint> endpoints) {
  Identity identity = Identity::from_seed(seed);
  DidDocument document = make_did_document(identity, std::move(endpoints), created_at);
  return Writer{std::move(identity), std::move(document)};
}

ChainValidation validate_chain(std::span<const LedgerBlock> blocks) {
  RegistryState state;
  std::vector<WriterEntry> writers;
  return replay(blocks, state, writers);
}

DidDocument RegistryView::resolve_did(const Did& did) const {
  const DidDocument* doc = state_->find_did(did);
  if (doc == nullptr) throw Error(ErrorCode::UnknownDid, did.str());
  return *doc;
}

CredentialSchema RegistryView::lookup_schema(const Hash256& schema_id) const {
  const CredentialSchema* schema = state_->find_schema(schema_id);
  if (schema == nullptr) throw Error(ErrorCode::UnknownSchema, to_hex(schema_id));
  return *schema;
}

CredentialStatus RegistryView::credential_status(const Hash256& credential_id) const {
  return state_->credential_status(credential_id);
}

std::optional<AnchorRecord> RegistryView::anchor(const Hash256& credential_id) const {
  const AnchorRecord* record = state_->find_anchor(credential_id);
  if (record == nullptr) return std::nullopt;
  return *record;
}

Ledger Ledger::genesis(std::span<const Writer> writers, LogicalClock& clock, LedgerMode mode) {
  if (writers.empty()) throw Error(ErrorCode::EmptyWriterSet, "genesis needs at least one writer");

  Ledger ledger;
  ledger.mode_ = mode;
  std::vector<RegistryTransaction> txs;
  for (std::size_t i = 0; i < writers.size(); ++i) {
    const Writer& w = writers[i];
    if (w.document.did != w.identity.did) {
      throw InvalidTransactionError(i, ErrorCode::KeyMismatch, "document does not belong to keys");
    }
    RegistryTransaction tx = make_register_did(w.identity, w.document);
    try {
      ledger.state_.apply(tx);
    } catch (const Error& e) {
      throw InvalidTransactionError(i, e.code(), e.what());
    }
    ledger.writers_.push_back({w.document.did, w.document.verification_key});
    txs.push_back(std::move(tx));
  }
  ledger.blocks_.push_back(
      seal_block(0, Hash256{}, clock.tick(), std::move(txs), writers.front().identity));
  return ledger;
}

Ledger Ledger::from_blocks(std::vector<LedgerBlock> blocks, LedgerMode mode) {
  Ledger ledger;
  ledger.mode_ = mode;
  ChainValidation result = replay(blocks, ledger.state_, ledger.writers_);
  if (!result.ok()) throw ChainValidationError(*result.first_invalid);
  ledger.blocks_ = std::move(blocks);
  return ledger;
}

const LedgerBlock& Ledger::append_block(std::vector<RegistryTransaction> transactions,
                                        const Identity& writer, LogicalClock& clock) {
  const WriterEntry* entry = find_writer(writers_, writer.did);
  if (entry == nullptr || entry->verification_key != writer.keys.public_key) {
    throw Error(ErrorCode::NotPermissioned, writer.did.str() + " is not in the writer set");
  }
  if (transactions.empty()) throw Error(ErrorCode::EmptyBatch, "no transactions to append");

  RegistryState next = state_;
  for (std::size_t i = 0; i < transactions.size(); ++i) {
    try {
      next.apply(transactions[i]);
    } catch (const Error& e) {
      throw InvalidTransactionError(i, e.code(), e.what());
    }
  }

  const LedgerBlock& last = blocks_.back();
  std::uint64_t timestamp = clock.tick();
  if (timestamp < last.timestamp) {
    throw Error(ErrorCode::ClockRegression, "clock is behind the chain head");
  }
  blocks_.push_back(
      seal_block(last.index + 1, last.block_hash, timestamp, std::move(transactions), writer));
  state_ = std::move(next);
  return blocks_.back();
}

bool Ledger::is_writer(const Did& did) const { return find_writer(writers_, did) != nullptr; }

RegistryView Ledger::view(const std::optional<Did>& reader) const {
  if (mode_ == LedgerMode::PrivatePermissioned && (!reader || !is_writer(*reader))) {
    throw Error(ErrorCode::ReadNotPermitted, "private ledger is readable by writers only");
  }
  return RegistryView(state_);
}

const LedgerBlock& LedgerSession::submit(RegistryTransaction tx) {
  std::vector<RegistryTransaction> batch;
  batch.push_back(std::move(tx));
  return submit(std::move(batch));
}

const LedgerBlock& LedgerSession::submit(std::vector<RegistryTransaction> txs) {
  return ledger_->append_block(std::move(txs), writer_, *clock_);
}

}  // namespace ssi
