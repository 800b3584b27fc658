#include "ssi/ledger/ledger_json.hpp"

namespace ssi {
namespace {

constexpr std::string_view kFormat = "ssi-ledger/v1";

LedgerMode mode_from_string(const std::string& text) {
  if (text == to_string(LedgerMode::PublicPermissioned)) return LedgerMode::PublicPermissioned;
  if (text == to_string(LedgerMode::PrivatePermissioned)) return LedgerMode::PrivatePermissioned;
  throw Error(ErrorCode::ParseError, "unknown ledger mode '" + text + "'");
}

}  // namespace

std::string export_ledger(const Ledger& ledger) {
  json::Json writers = json::Json::array();
  for (const auto& w : ledger.writer_set()) {
    writers.push_back({{"did", w.did.str()}, {"verification_key", to_hex(w.verification_key)}});
  }
  json::Json blocks = json::Json::array();
  for (const auto& b : ledger.blocks()) blocks.push_back(to_json(b));
  json::Json doc = {
      {"format", kFormat},
      {"mode", to_string(ledger.mode())},
      {"writer_set", std::move(writers)},
      {"blocks", std::move(blocks)},
  };
  return json::dump_canonical(doc);
}

Ledger import_ledger(std::string_view text) {
  json::Json doc = json::parse(text);
  if (json::get_string(doc, "format") != kFormat) {
    throw Error(ErrorCode::ParseError, "not an " + std::string(kFormat) + " document");
  }
  LedgerMode mode = mode_from_string(json::get_string(doc, "mode"));

  std::vector<WriterEntry> declared;
  for (const auto& w : json::get_array(doc, "writer_set")) {
    declared.push_back({get_did(w, "did"), json::get_fixed<VerifyKey>(w, "verification_key")});
  }
  std::vector<LedgerBlock> blocks;
  for (const auto& b : json::get_array(doc, "blocks")) blocks.push_back(block_from_json(b));

  Ledger ledger = Ledger::from_blocks(std::move(blocks), mode);
  if (ledger.writer_set() != declared) {
    throw ChainValidationError(
        FirstInvalid{0, ChainFault::BadWriter, "declared writer_set differs from genesis"});
  }
  // Any byte outside the canonical form would otherwise go unauthenticated.
  if (export_ledger(ledger) != text) {
    throw Error(ErrorCode::ParseError, "ledger file is not in canonical form");
  }
  return ledger;
}

}  // namespace ssi
