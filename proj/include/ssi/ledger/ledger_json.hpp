#pragma once

#include <string>
#include <string_view>

#include "ssi/ledger/ledger.hpp"

namespace ssi {

/// ledger.json: two-space indented UTF-8 JSON, keys in declaration order,
/// binary fields as lowercase hex. Byte-exact for a given ledger.
std::string export_ledger(const Ledger& ledger);

/// Parses, requires the input to be exactly the canonical export of what
/// it decodes to, and validates the chain. Throws ErrorCode::ParseError or
/// ChainValidationError.
Ledger import_ledger(std::string_view text);

}  // namespace ssi
