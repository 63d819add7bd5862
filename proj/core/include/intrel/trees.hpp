#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "intrel/relation.hpp"

namespace intrel {

/// A planar binary tree whose nodes carry their inorder rank 1..n as labels.
/// Children are stored by label with 0 for an empty subtree, so two trees of
/// the same shape have identical arrays.
class BinaryTree {
 public:
  BinaryTree() = default;

  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  /// Every node has only a left child (the chain 1 < 2 < ... < n).
  static BinaryTree left_comb(int n);
  /// Every node has only a right child.
  static BinaryTree right_comb(int n);

  int size() const noexcept { return static_cast<int>(left_.size()) - 1; }
  bool empty() const noexcept { return size() <= 0; }
  int root() const noexcept { return root_; }
  int left(int v) const { return left_.at(static_cast<std::size_t>(v)); }
  int right(int v) const { return right_.at(static_cast<std::size_t>(v)); }

  BinaryTree left_subtree() const;
  BinaryTree right_subtree() const;

  /// Trees reachable by one right rotation (A x B) y C -> A x (B y C).
  std::vector<BinaryTree> right_rotations() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  int root_ = 0;
  std::vector<int> left_{0};
  std::vector<int> right_{0};
};

std::vector<BinaryTree> all_binary_trees(int n);

/// i precedes j when i lies below j; left descendants give increasing pairs.
Relation from_binary_tree(const BinaryTree& t);
BinaryTree to_binary_tree(const Relation& p);

/// Tamari order: t <= u when u is reached from t by right rotations. Backed
/// by a reachability table computed once per size, sizes up to 8.
bool tamari_le(const BinaryTree& t, const BinaryTree& u);
std::vector<BinaryTree> tamari_up_set(const BinaryTree& t);
/// Cover pairs (lower, upper) of the Tamari lattice on n nodes, by index into all_binary_trees(n).
std::vector<std::pair<int, int>> tamari_covers(int n);

Relation from_tree_interval(const BinaryTree& lower, const BinaryTree& upper);

/// A plane tree whose internal nodes have at least two children. The gaps
/// between consecutive children are labelled 1..n in inorder.
class SchroderTree {
 public:
  SchroderTree() = default;
  explicit SchroderTree(std::vector<SchroderTree> children);

  bool is_leaf() const noexcept { return children_.empty(); }
  int size() const noexcept { return angles_; }
  const std::vector<SchroderTree>& children() const noexcept { return children_; }

  friend bool operator==(const SchroderTree& a, const SchroderTree& b);
  friend std::strong_ordering operator<=>(const SchroderTree& a, const SchroderTree& b);

 private:
  std::vector<SchroderTree> children_;
  int angles_ = 0;
};

std::vector<SchroderTree> all_schroder_trees(int n);
SchroderTree to_schroder_tree(const BinaryTree& t);

/// i precedes j when angle i sits in the child just left or just right of angle j.
Relation from_schroder_tree(const SchroderTree& s);

}  // namespace intrel
