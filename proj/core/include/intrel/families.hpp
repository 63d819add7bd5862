#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "intrel/relation.hpp"

namespace intrel {

enum class Family { IRel, IPos, WOEP, IWOIP, DWOIP, WOIP, WOFP, TOEP, TOIP, TOFP };

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::IRel, Family::IPos, Family::WOEP, Family::IWOIP, Family::DWOIP,
    Family::WOIP, Family::WOFP, Family::TOEP, Family::TOIP, Family::TOFP};

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// Membership test by the local characterization of each family. Every family
/// other than IRel requires a poset; non-posets are simply rejected.
bool is_in_family(const Relation& p, Family f);

/// A word using each of 1..n exactly once.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  /// Value at 1-based position i.
  int at(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& word() const noexcept { return word_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Value pairs (a, b), a < b, with b written before a.
std::vector<Pair> inversions(const Permutation& sigma);
/// Weak order on permutations: inclusion of inversion sets.
bool permutation_le(const Permutation& sigma, const Permutation& tau);
std::vector<Permutation> all_permutations(int n);

/// The chain sigma(1) < sigma(2) < ... as a poset on the values.
Relation from_permutation(const Permutation& sigma);
Permutation to_permutation(const Relation& p);
/// Increasing pairs from the upper end, decreasing pairs from the lower end.
Relation from_interval(const Permutation& lower, const Permutation& upper);

/// Disjoint nonempty sorted blocks covering 1..n, in order.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  explicit OrderedPartition(std::vector<std::vector<int>> blocks);

  int size() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  /// 0-based index of the block holding u.
  int block_of(int u) const;

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const OrderedPartition& a, const OrderedPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

std::vector<OrderedPartition> all_ordered_partitions(int n);
Relation from_ordered_partition(const OrderedPartition& pi);

/// Maximal linear extension of an IWOIP poset: every incomparable pair a < b
/// is ordered as b before a.
Relation maxle(const Relation& p);
/// Minimal linear extension of a DWOIP poset: incomparable a < b get a before b.
Relation minle(const Relation& p);

enum class EnumerationMode { Filter, Construct };

/// Filter mode scans every relation on [n] through the recognizer and is
/// bounded by the enumeration limit. Construct mode builds the family from
/// permutations, weak-order intervals, ordered partitions, binary trees,
/// Tamari intervals or Schroder trees; families with no such generator fall
/// back to filtering. Results come back sorted and duplicate-free.
std::vector<Relation> enumerate_family(int n, Family f, EnumerationMode mode);

}  // namespace intrel
