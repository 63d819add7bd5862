#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "intrel/errors.hpp"

namespace intrel {

/// Largest ground set supported by Relation.
inline constexpr int kMaxSize = 16;

/// One row of the adjacency matrix. Column v lives at bit (kMaxSize - v), so
/// comparing two rows numerically compares their bit strings left to right.
using RowMask = std::uint16_t;

namespace bits {

constexpr RowMask column(int v) noexcept {
  return static_cast<RowMask>(1u << (kMaxSize - v));
}

/// Columns lo..hi inclusive; empty when lo > hi.
constexpr RowMask columns(int lo, int hi) noexcept {
  if (lo > hi) return 0;
  const unsigned width = static_cast<unsigned>(hi - lo + 1);
  const unsigned low = (width >= 32u) ? ~0u : ((1u << width) - 1u);
  return static_cast<RowMask>(low << (kMaxSize - hi));
}

}  // namespace bits

using Pair = std::pair<int, int>;

/// A reflexive binary relation on [n] = {1..n}, stored as an n x n bit matrix
/// with the diagonal left implicit. Ordering is by size, then by the row-major
/// bit string, which gives a canonical order for serialization and map keys.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n);

  static Relation from_pairs(int n, std::span<const Pair> pairs);
  static Relation from_pairs(int n, std::initializer_list<Pair> pairs) {
    return from_pairs(n, std::span<const Pair>(pairs.begin(), pairs.size()));
  }

  /// The relation whose k-th off-diagonal pair (row-major) is present iff bit
  /// k of code is set. Valid for n(n-1) <= 64.
  static Relation from_code(int n, std::uint64_t code);

  int size() const noexcept { return n_; }

  bool contains(int u, int v) const noexcept {
    return u == v || (rows_[u - 1] & bits::column(v)) != 0;
  }
  void insert(int u, int v) noexcept {
    if (u != v) rows_[u - 1] |= bits::column(v);
  }
  void erase(int u, int v) noexcept { rows_[u - 1] &= static_cast<RowMask>(~bits::column(v)); }

  RowMask row(int u) const noexcept { return rows_[u - 1]; }
  void set_row(int u, RowMask mask) noexcept {
    rows_[u - 1] = static_cast<RowMask>(mask & ~bits::column(u) & bits::columns(1, n_));
  }

  /// Off-diagonal pairs, sorted by (u, v).
  std::vector<Pair> pairs() const;
  int pair_count() const noexcept;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend std::strong_ordering operator<=>(const Relation&, const Relation&) = default;

  std::size_t hash() const noexcept;

 private:
  std::uint8_t n_ = 0;
  std::array<RowMask, kMaxSize> rows_{};
};

/// Number of relations on [n], that is 2^(n(n-1)). Throws LimitError past n = 8.
std::uint64_t relation_count(int n);

/// Calls visit(r) for every relation on [n]. Subject to the enumeration limit.
void for_each_relation(int n, const std::function<void(const Relation&)>& visit);

Relation increasing_part(const Relation& r);
Relation decreasing_part(const Relation& r);

bool weak_le(const Relation& r, const Relation& s);
Relation meet(const Relation& r, const Relation& s);
Relation join(const Relation& r, const Relation& s);

/// The relation induced on the sorted positions x, relabelled 1..|x|.
Relation restriction(const Relation& r, std::span<const int> x);
/// Restriction to the contiguous block lo..hi.
Relation restriction(const Relation& r, int lo, int hi);

/// Pairs of r with both entries moved up by m.
std::vector<Pair> shift(const Relation& r, int m);

/// r, shifted s and every pair from [m] to the shifted block.
Relation under_product(const Relation& r, const Relation& s);
/// r, shifted s and every pair from the shifted block to [m].
Relation over_product(const Relation& r, const Relation& s);

/// Every relation on [m+n] whose restrictions to [m] and to m+1..m+n are r and
/// s; there are 2^(2mn) of them. The visitor may return false to stop early.
void for_each_shifted_shuffle(const Relation& r, const Relation& s,
                              const std::function<bool(const Relation&)>& visit);
std::vector<Relation> shifted_shuffle(const Relation& r, const Relation& s);

struct TotalCut {
  std::vector<int> x;
  std::vector<int> y;
  friend bool operator==(const TotalCut&, const TotalCut&) = default;
  friend auto operator<=>(const TotalCut&, const TotalCut&) = default;
};

bool is_total_cut(const Relation& t, std::span<const int> x);
std::vector<TotalCut> total_cuts(const Relation& t);

/// Every relation on [m+n] with a total cut (X, Y), |X| = m, restricting to r
/// on X and to s on Y. There are C(m+n, m) of them.
void for_each_convolution(const Relation& r, const Relation& s,
                          const std::function<bool(const Relation&)>& visit);
std::vector<Relation> convolution(const Relation& r, const Relation& s);

/// ([i], i+1..n) is a total cut; i = 0 and i = n always qualify.
bool has_primitive_cut(const Relation& t, int i);
bool has_reverse_cut(const Relation& t, int i);
/// Every i in 0..n with a primitive cut, ends included.
std::vector<int> primitive_cuts(const Relation& t);

bool is_under_indecomposable(const Relation& t);
bool is_over_indecomposable(const Relation& t);

bool is_antisymmetric(const Relation& r);
bool is_transitive(const Relation& r);
bool is_poset(const Relation& r);
Relation transitive_closure(const Relation& r);

/// Number of increasing pairs missing plus number of decreasing pairs present.
/// Strictly increases along weak-order covers.
int weak_rank(const Relation& r);

}  // namespace intrel

template <>
struct std::hash<intrel::Relation> {
  std::size_t operator()(const intrel::Relation& r) const noexcept { return r.hash(); }
};
