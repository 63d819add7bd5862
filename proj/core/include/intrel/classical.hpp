#pragma once

#include <utility>
#include <vector>

#include "intrel/families.hpp"
#include "intrel/trees.hpp"

// Product and coproduct rules of the classical algebras on permutations,
// ordered partitions and binary trees, written directly on those objects.

namespace intrel::classical {

/// Interleavings of sigma with tau shifted up by |sigma|.
std::vector<Permutation> shifted_shuffle(const Permutation& sigma, const Permutation& tau);
/// Permutations whose first |sigma| letters standardize to sigma and whose
/// remaining letters standardize to tau.
std::vector<Permutation> convolution(const Permutation& sigma, const Permutation& tau);
/// Pairs (std(prefix), std(suffix)) over every split point of rho.
std::vector<std::pair<Permutation, Permutation>> deconcatenations(const Permutation& rho);
/// Relabels a word on distinct values to 1..k keeping the relative order.
Permutation standardize(const std::vector<int>& word);

/// Block sequences built by taking the next block of pi, the next shifted
/// block of rho, or the union of both, until both are used up.
std::vector<OrderedPartition> shifted_shuffle(const OrderedPartition& pi, const OrderedPartition& rho);
std::vector<OrderedPartition> convolution(const OrderedPartition& pi, const OrderedPartition& rho);
std::vector<std::pair<OrderedPartition, OrderedPartition>> deconcatenations(
    const OrderedPartition& pi);
OrderedPartition standardize(const std::vector<std::vector<int>>& blocks);

/// `lower` hung from the leftmost leaf of `upper`.
BinaryTree graft_left(const BinaryTree& lower, const BinaryTree& upper);
/// `upper` hung from the rightmost leaf of `lower`.
BinaryTree graft_right(const BinaryTree& lower, const BinaryTree& upper);
/// Trees of the Tamari interval [graft_left(s, t), graft_right(s, t)].
std::vector<BinaryTree> tamari_product(const BinaryTree& s, const BinaryTree& t);

}  // namespace intrel::classical
