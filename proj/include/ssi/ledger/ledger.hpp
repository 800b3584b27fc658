#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssi/core/clock.hpp"
#include "ssi/ledger/block.hpp"
#include "ssi/ledger/registry_state.hpp"

namespace ssi {

/// Public-Permissioned: anyone reads, only the writer set appends.
/// Private-Permissioned: reads are gated behind writer membership too.
enum class LedgerMode { PublicPermissioned, PrivatePermissioned };

std::string_view to_string(LedgerMode mode) noexcept;

enum class ChainFault { HashMismatch, LinkBroken, BadWriter, BadSignature, InvalidTransaction };

std::string_view to_string(ChainFault fault) noexcept;

struct FirstInvalid {
  std::size_t index = 0;
  ChainFault cause = ChainFault::HashMismatch;
  std::string detail;
};

/// Ok, or the smallest failing block index and why.
struct ChainValidation {
  std::optional<FirstInvalid> first_invalid;
  bool ok() const noexcept { return !first_invalid.has_value(); }
};

class ChainValidationError : public Error {
 public:
  explicit ChainValidationError(FirstInvalid failure)
      : Error(ErrorCode::ChainInvalid, "block " + std::to_string(failure.index) + ": " +
                                           std::string(to_string(failure.cause)) + " (" +
                                           failure.detail + ")"),
        failure_(std::move(failure)) {}

  const FirstInvalid& failure() const noexcept { return failure_; }

 private:
  FirstInvalid failure_;
};

struct WriterEntry {
  Did did;
  VerifyKey verification_key;

  friend bool operator==(const WriterEntry&, const WriterEntry&) = default;
};

/// A permissioned writer: keys plus the document registered at genesis.
struct Writer {
  Identity identity;
  DidDocument document;

  static Writer create(const Seed& seed, std::uint64_t created_at,
                       std::vector<ServiceEndpoint> endpoints = {});
};

/// Checks hashes, linkage, writer membership, writer signatures and
/// transaction admission for every block, replaying registry state. The
/// writer set is taken from the genesis block's registrations.
ChainValidation validate_chain(std::span<const LedgerBlock> blocks);

/// Read-only registry queries over one ledger snapshot. Must not outlive
/// the ledger it came from.
class RegistryView {
 public:
  DidDocument resolve_did(const Did& did) const;
  CredentialSchema lookup_schema(const Hash256& schema_id) const;
  CredentialStatus credential_status(const Hash256& credential_id) const;
  std::optional<AnchorRecord> anchor(const Hash256& credential_id) const;

 private:
  friend class Ledger;
  explicit RegistryView(const RegistryState& state) : state_(&state) {}
  const RegistryState* state_;
};

class Ledger {
 public:
  /// One genesis block holding every writer's RegisterDid, sealed by the
  /// first writer. Throws EmptyWriterSet, or InvalidTransaction when a
  /// writer document is not self-consistent.
  static Ledger genesis(std::span<const Writer> writers, LogicalClock& clock,
                        LedgerMode mode = LedgerMode::PublicPermissioned);

  /// Rebuilds a ledger from stored blocks. Throws ChainValidationError.
  static Ledger from_blocks(std::vector<LedgerBlock> blocks, LedgerMode mode);

  /// Throws NotPermissioned, EmptyBatch, ClockRegression or
  /// InvalidTransactionError; the ledger is unchanged on any error.
  const LedgerBlock& append_block(std::vector<RegistryTransaction> transactions,
                                  const Identity& writer, LogicalClock& clock);

  const std::vector<LedgerBlock>& blocks() const noexcept { return blocks_; }
  const std::vector<WriterEntry>& writer_set() const noexcept { return writers_; }
  LedgerMode mode() const noexcept { return mode_; }
  bool is_writer(const Did& did) const;

  /// Read handle. In private mode `reader` must be a writer, otherwise
  /// ReadNotPermitted is thrown.
  RegistryView view(const std::optional<Did>& reader = std::nullopt) const;

  // Anonymous reads; equivalent to view().<query>.
  DidDocument resolve_did(const Did& did) const { return view().resolve_did(did); }
  CredentialSchema lookup_schema(const Hash256& id) const { return view().lookup_schema(id); }
  CredentialStatus credential_status(const Hash256& id) const {
    return view().credential_status(id);
  }

 private:
  Ledger() = default;

  std::vector<LedgerBlock> blocks_;
  std::vector<WriterEntry> writers_;
  LedgerMode mode_ = LedgerMode::PublicPermissioned;
  RegistryState state_;
};

inline ChainValidation validate_chain(const Ledger& ledger) {
  return validate_chain(ledger.blocks());
}

/// Submission handle used by issuers and registrants: every transaction
/// goes into its own block sealed by `writer`.
class LedgerSession {
 public:
  LedgerSession(Ledger& ledger, Identity writer, LogicalClock& clock)
      : ledger_(&ledger), writer_(std::move(writer)), clock_(&clock) {}

  const LedgerBlock& submit(RegistryTransaction tx);
  const LedgerBlock& submit(std::vector<RegistryTransaction> txs);

  Ledger& ledger() noexcept { return *ledger_; }
  const Ledger& ledger() const noexcept { return *ledger_; }
  LogicalClock& clock() noexcept { return *clock_; }
  const Identity& writer() const noexcept { return writer_; }

  /// Reads as the writer, so private-mode ledgers are readable.
  RegistryView view() const { return ledger_->view(writer_.did); }

 private:
  Ledger* ledger_;
  Identity writer_;
  LogicalClock* clock_;
};

}  // namespace ssi
