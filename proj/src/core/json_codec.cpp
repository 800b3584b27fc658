#include "ssi/core/json_codec.hpp"

namespace ssi::json {

const Json& field(const Json& object, std::string_view key) {
  if (!object.is_object()) {
    throw Error(ErrorCode::ParseError, "expected object when reading '" + std::string(key) + "'");
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw Error(ErrorCode::ParseError, "missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string get_string(const Json& object, std::string_view key) {
  const Json& value = field(object, key);
  if (!value.is_string()) {
    throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "' is not a string");
  }
  return value.get<std::string>();
}

std::uint64_t get_u64(const Json& object, std::string_view key) {
  const Json& value = field(object, key);
  if (!value.is_number_unsigned()) {
    throw Error(ErrorCode::ParseError,
                "field '" + std::string(key) + "' is not a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

Bytes get_hex(const Json& object, std::string_view key) {
  try {
    return from_hex(get_string(object, key));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "': " + e.what());
  }
}

const Json& get_array(const Json& object, std::string_view key) {
  const Json& value = field(object, key);
  if (!value.is_array()) {
    throw Error(ErrorCode::ParseError, "field '" + std::string(key) + "' is not an array");
  }
  return value;
}

Json parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty input");
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string dump_canonical(const Json& value) {
  try {
    return value.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace ssi::json
