#include "intrel/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "intrel/config.hpp"
#include "intrel/trees.hpp"

namespace intrel {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::IRel: return "IRel";
    case Family::IPos: return "IPos";
    case Family::WOEP: return "WOEP";
    case Family::IWOIP: return "IWOIP";
    case Family::DWOIP: return "DWOIP";
    case Family::WOIP: return "WOIP";
    case Family::WOFP: return "WOFP";
    case Family::TOEP: return "TOEP";
    case Family::TOIP: return "TOIP";
    case Family::TOFP: return "TOFP";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == text) return f;
  }
  throw InputError("unknown family '" + std::string(text) + "'");
}

namespace {

// Strict relation test; p.contains is reflexive.
inline bool lt(const Relation& p, int u, int v) { return u != v && p.contains(u, v); }

inline bool incomparable(const Relation& p, int a, int c) { return !lt(p, a, c) && !lt(p, c, a); }

bool total(const Relation& p) {
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = a + 1; b <= p.size(); ++b) {
      if (incomparable(p, a, b)) return false;
    }
  }
  return true;
}

bool increasing_flip_free(const Relation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 2; c <= n; ++c) {
      if (!lt(p, a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        if (!lt(p, a, b) && !lt(p, b, c)) return false;
      }
    }
  }
  return true;
}

bool decreasing_flip_free(const Relation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 2; c <= n; ++c) {
      if (!lt(p, c, a)) continue;
      for (int b = a + 1; b < c; ++b) {
        if (!lt(p, b, a) && !lt(p, c, b)) return false;
      }
    }
  }
  return true;
}

bool face_condition(const Relation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 2; c <= n; ++c) {
      if (!incomparable(p, a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        if (lt(p, a, b) != lt(p, c, b)) return false;
        if (lt(p, b, a) != lt(p, b, c)) return false;
      }
    }
  }
  return true;
}

bool tamari_interval_condition(const Relation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 2; c <= n; ++c) {
      const bool up = lt(p, a, c);
      const bool down = lt(p, c, a);
      if (!up && !down) continue;
      for (int b = a + 1; b < c; ++b) {
        if (up && !lt(p, b, c)) return false;
        if (down && !lt(p, b, a)) return false;
      }
    }
  }
  return true;
}

bool tree_condition(const Relation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 1; c <= n; ++c) {
      if (!incomparable(p, a, c)) continue;
      bool found = false;
      for (int b = a + 1; b < c && !found; ++b) found = lt(p, a, b) && lt(p, c, b);
      if (!found) return false;
    }
  }
  return true;
}

bool schroder_condition(const Relation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 1; c <= n; ++c) {
      if (!incomparable(p, a, c)) continue;
      bool some_free = false;
      bool all_below = true;
      for (int b = a + 1; b < c; ++b) {
        if (!lt(p, b, a) && !lt(p, b, c)) some_free = true;
        if (!(lt(p, b, a) && lt(p, b, c))) all_below = false;
      }
      if (!some_free && !all_below) return false;
    }
  }
  return true;
}

}  // namespace

bool is_in_family(const Relation& p, Family f) {
  if (f == Family::IRel) return true;
  if (!is_poset(p)) return false;
  switch (f) {
    case Family::IRel:
    case Family::IPos: return true;
    case Family::WOEP: return total(p);
    case Family::IWOIP: return increasing_flip_free(p);
    case Family::DWOIP: return decreasing_flip_free(p);
    case Family::WOIP: return increasing_flip_free(p) && decreasing_flip_free(p);
    case Family::WOFP:
      return increasing_flip_free(p) && decreasing_flip_free(p) && face_condition(p);
    case Family::TOEP: return tamari_interval_condition(p) && tree_condition(p);
    case Family::TOIP: return tamari_interval_condition(p);
    case Family::TOFP: return tamari_interval_condition(p) && schroder_condition(p);
  }
  return false;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n > kMaxSize) throw InputError("permutation longer than " + std::to_string(kMaxSize));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(at(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::vector<Pair> inversions(const Permutation& sigma) {
  const Permutation pos = sigma.inverse();
  std::vector<Pair> out;
  for (int a = 1; a <= sigma.size(); ++a) {
    for (int b = a + 1; b <= sigma.size(); ++b) {
      if (pos.at(b) < pos.at(a)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool permutation_le(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw InputError("permutation_le: size mismatch");
  const auto small = inversions(sigma);
  const auto large = inversions(tau);
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Relation from_permutation(const Permutation& sigma) {
  Relation r(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) {
    for (int j = i + 1; j <= sigma.size(); ++j) r.insert(sigma.at(i), sigma.at(j));
  }
  return r;
}

Permutation to_permutation(const Relation& p) {
  if (!is_in_family(p, Family::WOEP)) throw InputError("to_permutation: not a total order");
  const int n = p.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int u = 1; u <= n; ++u) {
    // u has exactly (number of elements below it) predecessors
    int below = 0;
    for (int v = 1; v <= n; ++v) below += (v != u && p.contains(v, u)) ? 1 : 0;
    word[static_cast<std::size_t>(below)] = u;
  }
  return Permutation(std::move(word));
}

Relation from_interval(const Permutation& lower, const Permutation& upper) {
  if (!permutation_le(lower, upper)) {
    throw InputError("from_interval: lower permutation is not below upper in the weak order");
  }
  const Relation low = from_permutation(lower);
  const Relation high = from_permutation(upper);
  Relation out(lower.size());
  for (int u = 1; u <= out.size(); ++u) {
    out.set_row(u, (high.row(u) & bits::columns(u + 1, out.size())) |
                       (low.row(u) & bits::columns(1, u - 1)));
  }
  return out;
}

OrderedPartition::OrderedPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  int n = 0;
  for (const auto& block : blocks_) n += static_cast<int>(block.size());
  if (n > kMaxSize) throw InputError("ordered partition larger than " + std::to_string(kMaxSize));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& block : blocks_) {
    if (block.empty()) throw InputError("ordered partition has an empty block");
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int v = block[i];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw InputError("ordered partition blocks must cover 1.." + std::to_string(n) +
                         " exactly once");
      }
      if (i > 0 && block[i - 1] > v) throw InputError("ordered partition blocks must be sorted");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  n_ = n;
}

int OrderedPartition::block_of(int u) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), u)) return static_cast<int>(k);
  }
  throw InputError("block_of: element " + std::to_string(u) + " not in partition");
}

std::vector<OrderedPartition> all_ordered_partitions(int n) {
  std::vector<OrderedPartition> out;
  std::vector<std::vector<int>> prefix;
  // choose the next block as any nonempty subset of what is left
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t remaining) {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
      std::vector<int> block;
      for (int v = 1; v <= n; ++v) {
        if ((sub >> (v - 1)) & 1u) block.push_back(v);
      }
      prefix.push_back(std::move(block));
      extend(remaining & ~sub);
      prefix.pop_back();
    }
  };
  extend(n == 0 ? 0u : ((1u << n) - 1u));
  std::sort(out.begin(), out.end());
  return out;
}

Relation from_ordered_partition(const OrderedPartition& pi) {
  Relation r(pi.size());
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (int u : blocks[i]) {
        for (int v : blocks[j]) r.insert(u, v);
      }
    }
  }
  return r;
}

Relation maxle(const Relation& p) {
  if (!is_in_family(p, Family::IWOIP)) throw InputError("maxle: input is not an IWOIP poset");
  Relation out = p;
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = a + 1; b <= p.size(); ++b) {
      if (incomparable(p, a, b)) out.insert(b, a);
    }
  }
  return out;
}

Relation minle(const Relation& p) {
  if (!is_in_family(p, Family::DWOIP)) throw InputError("minle: input is not a DWOIP poset");
  Relation out = p;
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = a + 1; b <= p.size(); ++b) {
      if (incomparable(p, a, b)) out.insert(a, b);
    }
  }
  return out;
}

namespace {

constexpr int kConstructLimit = 8;

std::vector<Relation> filter_scan(int n, Family f) {
  std::vector<Relation> out;
  for_each_relation(n, [&](const Relation& r) {
    if (is_in_family(r, f)) out.push_back(r);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Permutations reachable from sigma by adding inversions one adjacent swap at a time.
std::vector<Permutation> weak_up_set(const Permutation& sigma) {
  std::set<Permutation> seen{sigma};
  std::vector<Permutation> queue{sigma};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> word = queue[head].word();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) continue;
      std::swap(word[i], word[i + 1]);
      Permutation next(word);
      if (seen.insert(next).second) queue.push_back(std::move(next));
      std::swap(word[i], word[i + 1]);
    }
  }
  return queue;
}

void insert_unique(std::set<Relation>& into, const Relation& r, const char* what) {
  if (!into.insert(r).second) {
    throw std::logic_error(std::string(what) + ": two intervals produced the same poset");
  }
}

std::vector<Relation> construct(int n, Family f) {
  std::set<Relation> out;
  switch (f) {
    case Family::WOEP:
      for (const auto& sigma : all_permutations(n)) insert_unique(out, from_permutation(sigma), "WOEP");
      break;
    case Family::WOIP:
      for (const auto& sigma : all_permutations(n)) {
        for (const auto& tau : weak_up_set(sigma)) insert_unique(out, from_interval(sigma, tau), "WOIP");
      }
      break;
    case Family::WOFP:
      for (const auto& pi : all_ordered_partitions(n)) {
        insert_unique(out, from_ordered_partition(pi), "WOFP");
      }
      break;
    case Family::TOEP:
      for (const auto& t : all_binary_trees(n)) insert_unique(out, from_binary_tree(t), "TOEP");
      break;
    case Family::TOIP:
      for (const auto& t : all_binary_trees(n)) {
        for (const auto& u : tamari_up_set(t)) insert_unique(out, from_tree_interval(t, u), "TOIP");
      }
      break;
    case Family::TOFP:
      for (const auto& s : all_schroder_trees(n)) insert_unique(out, from_schroder_tree(s), "TOFP");
      break;
    default: {
      auto scanned = filter_scan(n, f);
      return scanned;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Relation> enumerate_family(int n, Family f, EnumerationMode mode) {
  if (n < 0) throw InputError("enumerate_family: negative size");
  if (mode == EnumerationMode::Filter) {
    require_enumerable(n, "enumerate_family (filter mode)");
    return filter_scan(n, f);
  }
  if (n > kConstructLimit) {
    throw LimitError("enumerate_family (construct mode) supports n <= " +
                     std::to_string(kConstructLimit));
  }
  return construct(n, f);
}

}  // namespace intrel
