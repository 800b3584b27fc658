#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ssi/core/bytes.hpp"

namespace ssi {

/// Authentication path for one leaf: sibling hashes from the leaf level up.
struct MerklePath {
  std::uint64_t leaf_index = 0;
  std::vector<Hash256> siblings;

  friend bool operator==(const MerklePath&, const MerklePath&) = default;
};

/// Salted commitment to one attribute: H(tag, name, value, salt) over the
/// canonical encoding, so field boundaries are unambiguous.
Hash256 attribute_commitment(std::string_view name, std::string_view value, const Salt& salt);

/// Fills the leaf level up to the next power of two.
const Hash256& merkle_padding_leaf();

Hash256 merkle_node(const Hash256& left, const Hash256& right);

/// Number of levels above the leaves for `leaf_count` leaves.
std::size_t merkle_depth(std::size_t leaf_count);

class MerkleTree {
 public:
  /// `leaves` must be nonempty.
  explicit MerkleTree(std::vector<Hash256> leaves);

  const Hash256& root() const noexcept { return levels_.back().front(); }
  std::size_t leaf_count() const noexcept { return leaf_count_; }
  MerklePath path(std::size_t leaf_index) const;

 private:
  std::size_t leaf_count_;
  std::vector<std::vector<Hash256>> levels_;  // levels_[0] = padded leaves
};

bool verify_merkle_path(const Hash256& leaf, const MerklePath& path, const Hash256& root,
                        std::size_t leaf_count);

}  // namespace ssi
