#include "ssi/core/canonical.hpp"

namespace ssi {

CanonicalWriter& CanonicalWriter::u64(std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(value >> shift));
  }
  return *this;
}

CanonicalWriter& CanonicalWriter::bytes(ByteView value) {
  u64(value.size());
  out_.insert(out_.end(), value.begin(), value.end());
  return *this;
}

CanonicalWriter& CanonicalWriter::text(std::string_view value) {
  return bytes(as_bytes(value));
}

std::uint64_t CanonicalReader::u64() {
  if (input_.size() - offset_ < 8) fail("truncated integer");
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i) value = (value << 8) | input_[offset_++];
  return value;
}

Bytes CanonicalReader::bytes() {
  std::uint64_t length = u64();
  if (length > input_.size() - offset_) fail("byte string overruns input");
  Bytes out(input_.begin() + static_cast<std::ptrdiff_t>(offset_),
            input_.begin() + static_cast<std::ptrdiff_t>(offset_ + length));
  offset_ += length;
  return out;
}

std::string CanonicalReader::text() {
  Bytes raw = bytes();
  return std::string(raw.begin(), raw.end());
}

void CanonicalReader::expect_tag(std::string_view domain_tag) {
  if (text() != domain_tag) fail("unexpected domain tag");
}

void CanonicalReader::expect_end() const {
  if (!at_end()) fail("trailing bytes");
}

void CanonicalReader::fail(const char* what) const {
  throw Error(ErrorCode::ParseError,
              std::string("canonical decode at offset ") + std::to_string(offset_) + ": " + what);
}

}  // namespace ssi
