#include "ssi/core/error.hpp"

namespace ssi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SeedLength: return "SeedLength";
    case ErrorCode::InvalidDid: return "InvalidDid";
    case ErrorCode::AuthFailure: return "AuthFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyWriterSet: return "EmptyWriterSet";
    case ErrorCode::NotPermissioned: return "NotPermissioned";
    case ErrorCode::InvalidTransaction: return "InvalidTransaction";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::ChainInvalid: return "ChainInvalid";
    case ErrorCode::ReadNotPermitted: return "ReadNotPermitted";
    case ErrorCode::ClockRegression: return "ClockRegression";
    case ErrorCode::UnknownDid: return "UnknownDid";
    case ErrorCode::UnknownSchema: return "UnknownSchema";
    case ErrorCode::UnknownCredential: return "UnknownCredential";
    case ErrorCode::BadSignature: return "BadSignature";
    case ErrorCode::StaleDocument: return "StaleDocument";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::DuplicateSchema: return "DuplicateSchema";
    case ErrorCode::DuplicateCredential: return "DuplicateCredential";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::NotSchemaOwner: return "NotSchemaOwner";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::WrongHolderKey: return "WrongHolderKey";
    case ErrorCode::NotIssuer: return "NotIssuer";
    case ErrorCode::AlreadyRevoked: return "AlreadyRevoked";
    case ErrorCode::CorruptCredential: return "CorruptCredential";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::StaleChallenge: return "StaleChallenge";
    case ErrorCode::Undeliverable: return "Undeliverable";
    case ErrorCode::BadProofOfPossession: return "BadProofOfPossession";
    case ErrorCode::UnknownRequest: return "UnknownRequest";
    case ErrorCode::AlreadyApproved: return "AlreadyApproved";
    case ErrorCode::DuplicateSubject: return "DuplicateSubject";
    case ErrorCode::UnknownApproval: return "UnknownApproval";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace ssi
