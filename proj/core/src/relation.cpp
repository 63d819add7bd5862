#include "intrel/relation.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "intrel/config.hpp"

namespace intrel {
namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxSize) {
    throw InputError("relation size " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxSize));
  }
}

void check_same_size(const Relation& r, const Relation& s, const char* what) {
  if (r.size() != s.size()) {
    throw InputError(std::string(what) + ": size mismatch (" + std::to_string(r.size()) +
                     " vs " + std::to_string(s.size()) + ")");
  }
}

// Maps bit j of a chunk onto column (first + j) of a row.
std::vector<RowMask> spread_table(int width, int first) {
  std::vector<RowMask> table(std::size_t{1} << width);
  for (std::size_t chunk = 0; chunk < table.size(); ++chunk) {
    RowMask mask = 0;
    for (int j = 0; j < width; ++j) {
      if ((chunk >> j) & 1u) mask |= bits::column(first + j);
    }
    table[chunk] = mask;
  }
  return table;
}

}  // namespace

Relation::Relation(int n) {
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
}

Relation Relation::from_pairs(int n, std::span<const Pair> pairs) {
  Relation r(n);
  for (const auto& [u, v] : pairs) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for size " + std::to_string(n));
    }
    r.insert(u, v);
  }
  return r;
}

Relation Relation::from_code(int n, std::uint64_t code) {
  Relation r(n);
  if (n <= 1) return r;
  const int width = n - 1;
  const std::uint64_t chunk_mask = (std::uint64_t{1} << width) - 1;
  for (int u = 1; u <= n; ++u) {
    std::uint64_t chunk = (code >> ((u - 1) * width)) & chunk_mask;
    RowMask row = 0;
    while (chunk != 0) {
      const int j = std::countr_zero(chunk);
      chunk &= chunk - 1;
      const int v = (j + 1 < u) ? j + 1 : j + 2;
      row |= bits::column(v);
    }
    r.rows_[u - 1] = row;
  }
  return r;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(pair_count()));
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      if (u != v && contains(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

int Relation::pair_count() const noexcept {
  int total = 0;
  for (int u = 0; u < n_; ++u) total += std::popcount(rows_[u]);
  return total;
}

std::size_t Relation::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (int u = 0; u < n_; ++u) {
    h ^= rows_[u];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t relation_count(int n) {
  if (n < 0) throw InputError("negative size");
  if (n > 8) throw LimitError("relation count 2^(n(n-1)) overflows 64 bits past n = 8");
  const int exponent = n * (n - 1);
  if (exponent >= 64) throw LimitError("relation count 2^(n(n-1)) overflows 64 bits");
  return std::uint64_t{1} << exponent;
}

void for_each_relation(int n, const std::function<void(const Relation&)>& visit) {
  require_enumerable(n, "for_each_relation");
  const std::uint64_t total = relation_count(n);
  for (std::uint64_t code = 0; code < total; ++code) visit(Relation::from_code(n, code));
}

Relation increasing_part(const Relation& r) {
  Relation out(r.size());
  for (int u = 1; u <= r.size(); ++u) out.set_row(u, r.row(u) & bits::columns(u + 1, r.size()));
  return out;
}

Relation decreasing_part(const Relation& r) {
  Relation out(r.size());
  for (int u = 1; u <= r.size(); ++u) out.set_row(u, r.row(u) & bits::columns(1, u - 1));
  return out;
}

bool weak_le(const Relation& r, const Relation& s) {
  check_same_size(r, s, "weak_le");
  const int n = r.size();
  for (int u = 1; u <= n; ++u) {
    const RowMask up = bits::columns(u + 1, n);
    const RowMask down = bits::columns(1, u - 1);
    if ((s.row(u) & up & ~r.row(u)) != 0) return false;
    if ((r.row(u) & down & ~s.row(u)) != 0) return false;
  }
  return true;
}

Relation meet(const Relation& r, const Relation& s) {
  check_same_size(r, s, "meet");
  const int n = r.size();
  Relation out(n);
  for (int u = 1; u <= n; ++u) {
    const RowMask up = bits::columns(u + 1, n);
    const RowMask down = bits::columns(1, u - 1);
    out.set_row(u, ((r.row(u) | s.row(u)) & up) | ((r.row(u) & s.row(u)) & down));
  }
  return out;
}

Relation join(const Relation& r, const Relation& s) {
  check_same_size(r, s, "join");
  const int n = r.size();
  Relation out(n);
  for (int u = 1; u <= n; ++u) {
    const RowMask up = bits::columns(u + 1, n);
    const RowMask down = bits::columns(1, u - 1);
    out.set_row(u, ((r.row(u) & s.row(u)) & up) | ((r.row(u) | s.row(u)) & down));
  }
  return out;
}

Relation restriction(const Relation& r, std::span<const int> x) {
  const int k = static_cast<int>(x.size());
  for (int i = 0; i < k; ++i) {
    if (x[i] < 1 || x[i] > r.size() || (i > 0 && x[i] <= x[i - 1])) {
      throw InputError("restriction: positions must be strictly increasing within 1.." +
                       std::to_string(r.size()));
    }
  }
  Relation out(k);
  for (int i = 0; i < k; ++i) {
    const RowMask source = r.row(x[i]);
    if (source == 0) continue;
    RowMask row = 0;
    for (int j = 0; j < k; ++j) {
      if (source & bits::column(x[j])) row |= bits::column(j + 1);
    }
    out.set_row(i + 1, row);
  }
  return out;
}

Relation restriction(const Relation& r, int lo, int hi) {
  if (lo > hi) return Relation(0);
  if (lo < 1 || hi > r.size()) throw InputError("restriction: block out of range");
  Relation out(hi - lo + 1);
  const RowMask block = bits::columns(lo, hi);
  for (int u = lo; u <= hi; ++u) {
    out.set_row(u - lo + 1, static_cast<RowMask>((r.row(u) & block) << (lo - 1)));
  }
  return out;
}

std::vector<Pair> shift(const Relation& r, int m) {
  std::vector<Pair> out = r.pairs();
  for (auto& [u, v] : out) {
    u += m;
    v += m;
  }
  return out;
}

namespace {

Relation juxtapose(const Relation& r, const Relation& s) {
  const int m = r.size();
  const int n = s.size();
  check_size(m + n);
  Relation out(m + n);
  for (int u = 1; u <= m; ++u) out.set_row(u, r.row(u));
  for (int u = 1; u <= n; ++u) out.set_row(m + u, static_cast<RowMask>(s.row(u) >> m));
  return out;
}

}  // namespace

Relation under_product(const Relation& r, const Relation& s) {
  Relation out = juxtapose(r, s);
  const int m = r.size();
  const int total = out.size();
  for (int u = 1; u <= m; ++u) out.set_row(u, out.row(u) | bits::columns(m + 1, total));
  return out;
}

Relation over_product(const Relation& r, const Relation& s) {
  Relation out = juxtapose(r, s);
  const int m = r.size();
  const int total = out.size();
  for (int u = m + 1; u <= total; ++u) out.set_row(u, out.row(u) | bits::columns(1, m));
  return out;
}

void for_each_shifted_shuffle(const Relation& r, const Relation& s,
                              const std::function<bool(const Relation&)>& visit) {
  const int m = r.size();
  const int n = s.size();
  const Relation base = juxtapose(r, s);
  const int cross = 2 * m * n;
  if (cross >= 63) throw LimitError("shifted shuffle too large to enumerate");
  const auto up_table = spread_table(n, m + 1);
  const auto down_table = spread_table(m, 1);
  const std::uint64_t up_mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t down_mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t total = std::uint64_t{1} << cross;
  Relation t = base;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int u = 1; u <= m; ++u) {
      t.set_row(u, base.row(u) | up_table[rest & up_mask]);
      rest >>= n;
    }
    for (int u = m + 1; u <= m + n; ++u) {
      t.set_row(u, base.row(u) | down_table[rest & down_mask]);
      rest >>= m;
    }
    if (!visit(t)) return;
  }
}

std::vector<Relation> shifted_shuffle(const Relation& r, const Relation& s) {
  std::vector<Relation> out;
  for_each_shifted_shuffle(r, s, [&](const Relation& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool is_total_cut(const Relation& t, std::span<const int> x) {
  const int n = t.size();
  RowMask in_x = 0;
  for (int a : x) {
    if (a < 1 || a > n) throw InputError("is_total_cut: position out of range");
    in_x |= bits::column(a);
  }
  const RowMask in_y = static_cast<RowMask>(bits::columns(1, n) & ~in_x);
  for (int u = 1; u <= n; ++u) {
    if (in_x & bits::column(u)) {
      if ((t.row(u) & in_y) != in_y) return false;
    } else if ((t.row(u) & in_x) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<TotalCut> total_cuts(const Relation& t) {
  const int n = t.size();
  std::vector<TotalCut> out;
  const RowMask all = bits::columns(1, n);
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    RowMask in_x = 0;
    for (int a = 1; a <= n; ++a) {
      if ((subset >> (a - 1)) & 1u) in_x |= bits::column(a);
    }
    const RowMask in_y = static_cast<RowMask>(all & ~in_x);
    bool ok = true;
    for (int u = 1; u <= n && ok; ++u) {
      ok = (in_x & bits::column(u)) ? (t.row(u) & in_y) == in_y : (t.row(u) & in_x) == 0;
    }
    if (!ok) continue;
    TotalCut cut;
    for (int a = 1; a <= n; ++a) ((subset >> (a - 1)) & 1u ? cut.x : cut.y).push_back(a);
    out.push_back(std::move(cut));
  }
  return out;
}

void for_each_convolution(const Relation& r, const Relation& s,
                          const std::function<bool(const Relation&)>& visit) {
  const int m = r.size();
  const int n = s.size();
  const int total = m + n;
  check_size(total);
  // selector[i] is true when position i+1 belongs to X
  std::vector<bool> selector(static_cast<std::size_t>(total), false);
  std::fill(selector.begin(), selector.begin() + m, true);
  std::vector<int> x;
  std::vector<int> y;
  do {
    x.clear();
    y.clear();
    for (int i = 0; i < total; ++i) (selector[i] ? x : y).push_back(i + 1);
    RowMask x_mask = 0;
    RowMask y_mask = 0;
    for (int a : x) x_mask |= bits::column(a);
    for (int b : y) y_mask |= bits::column(b);
    Relation t(total);
    for (int i = 0; i < m; ++i) {
      RowMask row = y_mask;
      for (int j = 0; j < m; ++j) {
        if (i != j && r.contains(i + 1, j + 1)) row |= bits::column(x[j]);
      }
      t.set_row(x[i], row);
    }
    for (int i = 0; i < n; ++i) {
      RowMask row = 0;
      for (int j = 0; j < n; ++j) {
        if (i != j && s.contains(i + 1, j + 1)) row |= bits::column(y[j]);
      }
      t.set_row(y[i], row);
    }
    if (!visit(t)) return;
  } while (std::prev_permutation(selector.begin(), selector.end()));
}

std::vector<Relation> convolution(const Relation& r, const Relation& s) {
  std::vector<Relation> out;
  for_each_convolution(r, s, [&](const Relation& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool has_primitive_cut(const Relation& t, int i) {
  const int n = t.size();
  if (i < 0 || i > n) throw InputError("has_primitive_cut: cut position out of range");
  const RowMask right = bits::columns(i + 1, n);
  const RowMask left = bits::columns(1, i);
  for (int a = 1; a <= i; ++a) {
    if ((t.row(a) & right) != right) return false;
  }
  for (int b = i + 1; b <= n; ++b) {
    if ((t.row(b) & left) != 0) return false;
  }
  return true;
}

bool has_reverse_cut(const Relation& t, int i) {
  const int n = t.size();
  if (i < 0 || i > n) throw InputError("has_reverse_cut: cut position out of range");
  const RowMask right = bits::columns(i + 1, n);
  const RowMask left = bits::columns(1, i);
  for (int b = i + 1; b <= n; ++b) {
    if ((t.row(b) & left) != left) return false;
  }
  for (int a = 1; a <= i; ++a) {
    if ((t.row(a) & right) != 0) return false;
  }
  return true;
}

std::vector<int> primitive_cuts(const Relation& t) {
  std::vector<int> out;
  for (int i = 0; i <= t.size(); ++i) {
    if (has_primitive_cut(t, i)) out.push_back(i);
  }
  return out;
}

bool is_under_indecomposable(const Relation& t) {
  if (t.size() == 0) throw InputError("indecomposability is undefined for the size-0 relation");
  for (int i = 1; i < t.size(); ++i) {
    if (has_primitive_cut(t, i)) return false;
  }
  return true;
}

bool is_over_indecomposable(const Relation& t) {
  if (t.size() == 0) throw InputError("indecomposability is undefined for the size-0 relation");
  for (int i = 1; i < t.size(); ++i) {
    if (has_reverse_cut(t, i)) return false;
  }
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (int u = 1; u <= r.size(); ++u) {
    for (int v = u + 1; v <= r.size(); ++v) {
      if (r.contains(u, v) && r.contains(v, u)) return false;
    }
  }
  return true;
}

bool is_transitive(const Relation& r) {
  const int n = r.size();
  for (int u = 1; u <= n; ++u) {
    const RowMask reach = r.row(u) | bits::column(u);
    for (int v = 1; v <= n; ++v) {
      if (v != u && (r.row(u) & bits::column(v)) && (r.row(v) & ~reach) != 0) return false;
    }
  }
  return true;
}

bool is_poset(const Relation& r) { return is_antisymmetric(r) && is_transitive(r); }

Relation transitive_closure(const Relation& r) {
  Relation out = r;
  const int n = r.size();
  for (int k = 1; k <= n; ++k) {
    for (int u = 1; u <= n; ++u) {
      if (u != k && (out.row(u) & bits::column(k))) out.set_row(u, out.row(u) | out.row(k));
    }
  }
  return out;
}

int weak_rank(const Relation& r) {
  const int n = r.size();
  int rank = 0;
  for (int u = 1; u <= n; ++u) {
    rank += std::popcount(static_cast<RowMask>(bits::columns(u + 1, n) & ~r.row(u)));
    rank += std::popcount(static_cast<RowMask>(bits::columns(1, u - 1) & r.row(u)));
  }
  return rank;
}

}  // namespace intrel
