#include "ssi/credential/merkle.hpp"

#include <stdexcept>

#include "ssi/core/canonical.hpp"
#include "ssi/identity/crypto.hpp"

namespace ssi {

Hash256 attribute_commitment(std::string_view name, std::string_view value, const Salt& salt) {
  return sha256(
      CanonicalWriter("ssi/attribute-commitment/v1").text(name).text(value).fixed(salt).data());
}

const Hash256& merkle_padding_leaf() {
  static const Hash256 padding = sha256(CanonicalWriter("ssi/merkle-padding/v1").data());
  return padding;
}

Hash256 merkle_node(const Hash256& left, const Hash256& right) {
  return sha256(CanonicalWriter("ssi/merkle-node/v1").fixed(left).fixed(right).data());
}

std::size_t merkle_depth(std::size_t leaf_count) {
  std::size_t depth = 0;
  while ((std::size_t{1} << depth) < leaf_count) ++depth;
  return depth;
}

MerkleTree::MerkleTree(std::vector<Hash256> leaves) : leaf_count_(leaves.size()) {
  if (leaves.empty()) throw std::invalid_argument("merkle tree needs at least one leaf");
  leaves.resize(std::size_t{1} << merkle_depth(leaf_count_), merkle_padding_leaf());
  levels_.push_back(std::move(leaves));
  while (levels_.back().size() > 1) {
    const auto& below = levels_.back();
    std::vector<Hash256> above;
    above.reserve(below.size() / 2);
    for (std::size_t i = 0; i < below.size(); i += 2) {
      above.push_back(merkle_node(below[i], below[i + 1]));
    }
    levels_.push_back(std::move(above));
  }
}

MerklePath MerkleTree::path(std::size_t leaf_index) const {
  if (leaf_index >= leaf_count_) throw std::out_of_range("merkle leaf index");
  MerklePath out{leaf_index, {}};
  std::size_t position = leaf_index;
  for (std::size_t level = 0; level + 1 < levels_.size(); ++level) {
    out.siblings.push_back(levels_[level][position ^ 1]);
    position >>= 1;
  }
  return out;
}

bool verify_merkle_path(const Hash256& leaf, const MerklePath& path, const Hash256& root,
                        std::size_t leaf_count) {
  if (path.leaf_index >= leaf_count || path.siblings.size() != merkle_depth(leaf_count)) {
    return false;
  }
  Hash256 node = leaf;
  std::uint64_t position = path.leaf_index;
  for (const Hash256& sibling : path.siblings) {
    node = (position & 1) ? merkle_node(sibling, node) : merkle_node(node, sibling);
    position >>= 1;
  }
  return node == root;
}

}  // namespace ssi
