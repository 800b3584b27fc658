#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssi {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Fixed-width byte string with a phantom tag so that, for example, a
/// verification key cannot be passed where a hash is expected.
template <std::size_t N, class Tag>
struct FixedBytes {
  static constexpr std::size_t size_bytes = N;
  std::array<std::uint8_t, N> bytes{};

  constexpr std::size_t size() const noexcept { return N; }
  std::uint8_t* data() noexcept { return bytes.data(); }
  const std::uint8_t* data() const noexcept { return bytes.data(); }
  ByteView view() const noexcept { return {bytes.data(), N}; }
  std::span<std::uint8_t, N> mut_view() noexcept { return bytes; }

  bool is_zero() const noexcept {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
  }

  /// Copies exactly N bytes; the caller guarantees the length.
  static FixedBytes from(ByteView src) {
    FixedBytes out;
    std::copy_n(src.begin(), N, out.bytes.begin());
    return out;
  }

  friend bool operator==(const FixedBytes&, const FixedBytes&) = default;
  friend auto operator<=>(const FixedBytes&, const FixedBytes&) = default;
};

using Hash256 = FixedBytes<32, struct Hash256Tag>;
using Salt = FixedBytes<16, struct SaltTag>;
using Challenge = FixedBytes<32, struct ChallengeTag>;

std::string to_hex(ByteView data);

template <std::size_t N, class Tag>
std::string to_hex(const FixedBytes<N, Tag>& value) {
  return to_hex(value.view());
}

/// Strict lowercase hex decoding. Uppercase digits and odd lengths are
/// rejected so that every byte string has exactly one textual form.
Bytes from_hex(std::string_view text);

template <class Fixed>
Fixed fixed_from_hex(std::string_view text);

std::string to_base58(ByteView data);
Bytes from_base58(std::string_view text);

std::string to_base64(ByteView data);
Bytes from_base64(std::string_view text);

inline Bytes to_bytes(std::string_view text) {
  return Bytes(text.begin(), text.end());
}

inline ByteView as_bytes(std::string_view text) {
  return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

/// True if `needle` occurs anywhere inside `haystack`.
bool contains_subsequence(ByteView haystack, ByteView needle);

}  // namespace ssi

#include "ssi/core/error.hpp"

namespace ssi {

template <class Fixed>
Fixed fixed_from_hex(std::string_view text) {
  Bytes raw = from_hex(text);
  if (raw.size() != Fixed::size_bytes) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(Fixed::size_bytes) +
                                           " hex-encoded bytes, got " + std::to_string(raw.size()));
  }
  return Fixed::from(raw);
}

}  // namespace ssi
