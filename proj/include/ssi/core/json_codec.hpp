#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ssi/core/bytes.hpp"

namespace ssi::json {

/// Insertion-ordered JSON keeps on-disk key order equal to declaration order.
using Json = nlohmann::ordered_json;

/// Strict field accessors. Any missing key or wrong type becomes
/// ErrorCode::ParseError naming the offending key.
const Json& field(const Json& object, std::string_view key);
std::string get_string(const Json& object, std::string_view key);
std::uint64_t get_u64(const Json& object, std::string_view key);
Bytes get_hex(const Json& object, std::string_view key);
const Json& get_array(const Json& object, std::string_view key);

template <class Fixed>
Fixed get_fixed(const Json& object, std::string_view key) {
  try {
    return fixed_from_hex<Fixed>(get_string(object, key));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "': " + e.what());
  }
}

/// Parses UTF-8 text; malformed input raises ErrorCode::ParseError.
Json parse(std::string_view text);

/// Two-space indented dump with a trailing newline: the canonical file form.
std::string dump_canonical(const Json& value);

}  // namespace ssi::json
