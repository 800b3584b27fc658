#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ssi {

enum class ErrorCode {
  // identity-core
  SeedLength,
  InvalidDid,
  AuthFailure,
  ParseError,
  // registry-ledger
  EmptyWriterSet,
  NotPermissioned,
  InvalidTransaction,
  EmptyBatch,
  ChainInvalid,
  ReadNotPermitted,
  ClockRegression,
  UnknownDid,
  UnknownSchema,
  UnknownCredential,
  BadSignature,
  StaleDocument,
  // credential-engine
  DuplicateAttribute,
  DuplicateSchema,
  DuplicateCredential,
  SchemaMismatch,
  NotSchemaOwner,
  UnknownAttribute,
  WrongHolderKey,
  NotIssuer,
  AlreadyRevoked,
  CorruptCredential,
  // agent-wallet
  KeyMismatch,
  StaleChallenge,
  Undeliverable,
  // pki-baseline
  BadProofOfPossession,
  UnknownRequest,
  AlreadyApproved,
  DuplicateSubject,
  UnknownApproval,
  BadConfig,
  // scenario-cli
  ConfigError,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Rejection of one transaction inside a batch; `cause` names the rule it broke.
class InvalidTransactionError : public Error {
 public:
  InvalidTransactionError(std::size_t index, ErrorCode cause, const std::string& detail)
      : Error(ErrorCode::InvalidTransaction,
              "transaction " + std::to_string(index) + " (" + std::string(to_string(cause)) +
                  "): " + detail),
        index_(index),
        cause_(cause) {}

  std::size_t index() const noexcept { return index_; }
  ErrorCode cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  ErrorCode cause_;
};

}  // namespace ssi
