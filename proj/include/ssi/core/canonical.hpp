#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ssi/core/bytes.hpp"

namespace ssi {

/// Builds the canonical byte form of a payload before it is hashed or
/// signed. Encoding (see docs/canonical-encoding.md):
///
///   integer      8 bytes, big-endian
///   byte string  8-byte big-endian length, then the raw bytes
///   text         encoded as the byte string of its UTF-8 form
///   list         8-byte big-endian element count, then each element
///
/// Fields are appended in declaration order. Every signed payload starts
/// with a domain tag (a text field) naming the structure and its version.
class CanonicalWriter {
 public:
  CanonicalWriter() = default;
  explicit CanonicalWriter(std::string_view domain_tag) { text(domain_tag); }

  CanonicalWriter& u64(std::uint64_t value);
  CanonicalWriter& bytes(ByteView value);
  CanonicalWriter& text(std::string_view value);

  template <std::size_t N, class Tag>
  CanonicalWriter& fixed(const FixedBytes<N, Tag>& value) {
    return bytes(value.view());
  }

  CanonicalWriter& count(std::size_t n) { return u64(static_cast<std::uint64_t>(n)); }

  const Bytes& data() const& noexcept { return out_; }
  Bytes take() noexcept { return std::move(out_); }

 private:
  Bytes out_;
};

/// Inverse of CanonicalWriter. Every read is bounds-checked; malformed
/// input raises ErrorCode::ParseError.
class CanonicalReader {
 public:
  explicit CanonicalReader(ByteView input) : input_(input) {}

  std::uint64_t u64();
  Bytes bytes();
  std::string text();
  void expect_tag(std::string_view domain_tag);

  template <class Fixed>
  Fixed fixed() {
    Bytes raw = bytes();
    if (raw.size() != Fixed::size_bytes) fail("fixed-width field has wrong length");
    return Fixed::from(raw);
  }

  bool at_end() const noexcept { return offset_ == input_.size(); }
  void expect_end() const;

 private:
  [[noreturn]] void fail(const char* what) const;

  ByteView input_;
  std::size_t offset_ = 0;
};

}  // namespace ssi
