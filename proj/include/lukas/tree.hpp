#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lukas/path.hpp"

namespace lukas {

// Rooted tree with ordered children. A node with no children is a leaf;
// any other node is internal.
class PlaneTree {
 public:
  PlaneTree() = default;  // leaf
  explicit PlaneTree(std::vector<PlaneTree> children) : children_(std::move(children)) {}

  // Text format: leaf "()", internal "(" + children joined by spaces + ")".
  // Also accepts the JSON encoding (nested arrays, leaf = []).
  static PlaneTree parse(const std::string& text);

  bool is_leaf() const { return children_.empty(); }
  int degree() const { return static_cast<int>(children_.size()); }
  const std::vector<PlaneTree>& children() const { return children_; }
  int node_count() const;
  std::string to_text() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<PlaneTree> children_;
};

// Child indices (1-based) from the root down to a node.
using NodePath = std::vector<int>;

// Throws std::out_of_range when the address does not resolve.
const PlaneTree& node_at(const PlaneTree& tree, const NodePath& address);

// Contour bijection, path -> tree: each up-step of degree k becomes an
// internal node with k+1 children filled depth-first left to right, each
// down-step a leaf.
PlaneTree path_to_tree(const LukasPath& path);

// Inverse direction: preorder walk, leaf -> D, internal node of degree k+1 -> U_k.
LukasPath tree_to_path(const PlaneTree& tree);

// Thorn counts of an internal node u: descending edges of proper ancestors
// strictly left / right of the ancestor-to-u path. The l-th child of a node
// with k children inherits the parent's counts plus (l-1, k-l).
struct ThornPair {
  int lthorn = 0;
  int rthorn = 0;
  friend bool operator==(ThornPair, ThornPair) = default;
};

// One pair per internal node, in preorder (aligned with the up-steps of the
// associated path).
std::vector<ThornPair> thorn_pairs(const PlaneTree& tree);
long long lthorn(const PlaneTree& tree);
long long rthorn(const PlaneTree& tree);

// Left-right reflection: recursively reverse every node's child order.
PlaneTree mirror(const PlaneTree& tree);

// Lodestars: internal nodes whose children are all leaves; returns the first
// and last such node in preorder, or nothing when the tree is a single leaf.
std::optional<std::pair<NodePath, NodePath>> find_lodestars(const PlaneTree& tree);

// Exchange the two lodestar subtrees (each a star, so exchanging child counts
// suffices). Identity when the lodestars coincide or are absent.
PlaneTree lodestar_swap(const PlaneTree& tree);

// Replace the subtree at `address` by a star with `leaf_count` leaves.
PlaneTree with_star_at(const PlaneTree& tree, const NodePath& address, int leaf_count);

// Multiset of child counts over internal nodes.
DegreeMultiset internal_degree_multiset(const PlaneTree& tree);

}  // namespace lukas
