#include "intrel/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "intrel/errors.hpp"
#include "intrel/family_algebras.hpp"
#include "intrel/families.hpp"
#include "intrel/hopf.hpp"
#include "intrel/json_io.hpp"
#include "intrel/projections.hpp"
#include "intrel/trees.hpp"

namespace intrel {
namespace {

using Json = nlohmann::json;
using json_io::to_json;

// Counts checks and keeps the first failure of one named check.
class Probe {
 public:
  template <class Detail>
  bool expect(bool ok, Detail&& detail) {
    ++count_;
    if (!ok && !failure_) failure_ = detail();
    return ok;
  }
  void fail(Json detail) {
    ++count_;
    if (!failure_) failure_ = std::move(detail);
  }
  std::int64_t count() const { return count_; }
  const std::optional<Json>& failure() const { return failure_; }

 private:
  std::int64_t count_ = 0;
  std::optional<Json> failure_;
};

struct Check {
  std::string id;
  std::function<void(Probe&)> run;
};

std::vector<Relation> relations_of(int n) {
  std::vector<Relation> out;
  for_each_relation(n, [&](const Relation& r) { out.push_back(r); });
  return out;
}

std::vector<Relation> posets_of(int n) { return enumerate_family(n, Family::IPos, EnumerationMode::Filter); }

std::vector<Relation> carrier_set(int n, Carrier c) {
  return c == Carrier::IRel ? relations_of(n) : posets_of(n);
}

Json pair_json(const Relation& r, const Relation& s) { return {{"left", to_json(r)}, {"right", to_json(s)}}; }

std::int64_t binomial(int n, int k) {
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::vector<int>> subsets_of(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (int v = 1; v <= n; ++v) {
      if (mask & (1U << (v - 1))) s.push_back(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Relations one weak-order cover above r: drop an increasing pair or add a decreasing one.
std::vector<Relation> upper_covers(const Relation& r) {
  std::vector<Relation> out;
  const int n = r.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (r.contains(a, b)) {
        Relation s = r;
        s.erase(a, b);
        out.push_back(s);
      }
      if (!r.contains(b, a)) {
        Relation s = r;
        s.insert(b, a);
        out.push_back(s);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- lattice

void add_lattice_checks(std::vector<Check>& checks, int n_max) {
  for (int n = 0; n <= std::min(n_max, 3); ++n) {
    checks.push_back({"lattice.axioms.n" + std::to_string(n), [n](Probe& probe) {
      const auto all = relations_of(n);
      for (const auto& r : all) {
        for (const auto& s : all) {
          const Relation m = meet(r, s);
          const Relation j = join(r, s);
          const bool ok = m == meet(s, r) && j == join(s, r) && meet(r, r) == r && join(r, r) == r &&
                          meet(r, join(r, s)) == r && join(r, meet(r, s)) == r && weak_le(m, r) &&
                          weak_le(m, s) && weak_le(r, j) && weak_le(s, j) &&
                          (weak_le(r, s) && weak_le(s, r)) == (r == s);
          if (!probe.expect(ok, [&] { return pair_json(r, s); })) return;
        }
      }
      if (n > 2) return;
      for (const auto& r : all) {
        for (const auto& s : all) {
          const Relation m = meet(r, s);
          const Relation j = join(r, s);
          for (const auto& u : all) {
            bool ok = meet(m, u) == meet(r, meet(s, u)) && join(j, u) == join(r, join(s, u));
            if (weak_le(u, r) && weak_le(u, s)) ok = ok && weak_le(u, m);
            if (weak_le(r, u) && weak_le(s, u)) ok = ok && weak_le(j, u);
            if (!probe.expect(ok, [&] { return Json{{"r", to_json(r)}, {"s", to_json(s)}, {"u", to_json(u)}}; }))
              return;
          }
        }
      }
    }});
  }
  for (int total = 0; total <= std::min(n_max, 4); ++total) {
    checks.push_back({"lattice.shuffle.total" + std::to_string(total), [total](Probe& probe) {
      const auto ambient = relations_of(total);
      for (int m = 0; m <= total; ++m) {
        const int n = total - m;
        for (const auto& r : relations_of(m)) {
          for (const auto& s : relations_of(n)) {
            const auto shuffles = shifted_shuffle(r, s);
            const Relation lo = under_product(r, s);
            const Relation hi = over_product(r, s);
            std::vector<Relation> interval;
            std::vector<Relation> restricted;
            for (const auto& t : ambient) {
              if (weak_le(lo, t) && weak_le(t, hi)) interval.push_back(t);
              if (restriction(t, 1, m) == r && restriction(t, m + 1, total) == s) restricted.push_back(t);
            }
            std::vector<Relation> sorted = shuffles;
            std::sort(sorted.begin(), sorted.end());
            std::sort(interval.begin(), interval.end());
            std::sort(restricted.begin(), restricted.end());
            const auto conv = convolution(r, s);
            const bool ok = sorted == interval && sorted == restricted &&
                            static_cast<std::int64_t>(shuffles.size()) == (std::int64_t{1} << (2 * m * n)) &&
                            static_cast<std::int64_t>(conv.size()) == binomial(total, m) &&
                            std::set<Relation>(conv.begin(), conv.end()).size() == conv.size();
            if (!probe.expect(ok, [&] { return pair_json(r, s); })) return;
            for (const auto& t : conv) {
              if (!probe.expect(is_poset(t) == (is_poset(r) && is_poset(s)),
                                [&] { return Json{{"factors", pair_json(r, s)}, {"term", to_json(t)}}; }))
                return;
            }
          }
        }
      }
    }});
  }
  for (int n = 0; n <= std::min(n_max, 4); ++n) {
    checks.push_back({"lattice.standardization.n" + std::to_string(n), [n](Probe& probe) {
      const auto subsets = subsets_of(n);
      for (const auto& r : relations_of(n)) {
        for (const auto& x : subsets) {
          const Relation rx = restriction(r, x);
          for (const auto& y : subsets) {
            if (!std::includes(x.begin(), x.end(), y.begin(), y.end())) continue;
            std::vector<int> ranks;
            for (int v : y) ranks.push_back(static_cast<int>(std::find(x.begin(), x.end(), v) - x.begin()) + 1);
            if (!probe.expect(restriction(rx, ranks) == restriction(r, y),
                              [&] { return Json{{"rel", to_json(r)}, {"x", x}, {"y", y}}; }))
              return;
          }
        }
      }
    }});
  }
}

// ---------------------------------------------------------------- hopf

template <class Visit>
void for_each_split(int total, int parts, Visit visit) {
  std::vector<int> sizes(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> go = [&](int index, int left) {
    if (index == parts - 1) {
      sizes[static_cast<std::size_t>(index)] = left;
      visit(sizes);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      sizes[static_cast<std::size_t>(index)] = k;
      go(index + 1, left - k);
    }
  };
  go(0, total);
}

LinearCombination product_of(const LinearCombination& a, const LinearCombination& b, Carrier c) {
  LinearCombination out;
  for (const auto& [r, cr] : a) {
    for (const auto& [s, cs] : b) {
      for (const auto& [t, ct] : shuffle_product(r, s, c)) out.add(t, checked_mul(checked_mul(cr, cs), ct));
    }
  }
  return out;
}

void add_hopf_checks(std::vector<Check>& checks, int n_max) {
  for (Carrier carrier : {Carrier::IRel, Carrier::IPos}) {
    const std::string tag(to_string(carrier));
    for (int total = 0; total <= std::min(n_max, 4); ++total) {
      checks.push_back({"hopf.associativity." + tag + ".total" + std::to_string(total), [=](Probe& probe) {
        for_each_split(total, 3, [&](const std::vector<int>& sz) {
          if (probe.failure()) return;
          const auto as = carrier_set(sz[0], carrier);
          const auto bs = carrier_set(sz[1], carrier);
          const auto cs = carrier_set(sz[2], carrier);
          for (const auto& a : as) {
            for (const auto& b : bs) {
              const auto ab = shuffle_product(a, b, carrier);
              for (const auto& c : cs) {
                LinearCombination fc;
                fc.add(c, 1);
                LinearCombination fa;
                fa.add(a, 1);
                const auto left = product_of(ab, fc, carrier);
                const auto right = product_of(fa, shuffle_product(b, c, carrier), carrier);
                bool graded = true;
                for (const auto& [t, k] : left) graded = graded && t.size() == total && k == 1;
                if (!probe.expect(left == right && graded, [&] {
                      return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
                    }))
                  return;
              }
            }
          }
        });
      }});
      checks.push_back({"hopf.compatibility." + tag + ".total" + std::to_string(total), [=](Probe& probe) {
        for (int m = 0; m <= total; ++m) {
          for (const auto& r : carrier_set(m, carrier)) {
            for (const auto& s : carrier_set(total - m, carrier)) {
              if (!probe.expect(hopf_compatible(r, s, carrier), [&] { return pair_json(r, s); })) return;
            }
          }
        }
      }});
    }
  }
  for (int n = 0; n <= std::min(n_max, 4); ++n) {
    checks.push_back({"hopf.coassociativity.n" + std::to_string(n), [n](Probe& probe) {
      for (const auto& t : relations_of(n)) {
        bool graded = true;
        for (const auto& [key, c] : cut_coproduct(t)) graded = graded && key.first.size() + key.second.size() == n;
        if (!probe.expect(graded && left_iterated_coproduct(t) == right_iterated_coproduct(t),
                          [&] { return to_json(t); }))
          return;
      }
    }});
  }
  for (int total = 2; total <= std::min(n_max, 4); ++total) {
    checks.push_back({"hopf.interval_product.total" + std::to_string(total), [total](Probe& probe) {
      for (int m = 1; m < total; ++m) {
        const int n = total - m;
        const auto rs = relations_of(m);
        const auto ss = relations_of(n);
        for (const auto& r : rs) {
          for (const auto& r2 : rs) {
            if (!weak_le(r, r2)) continue;
            LinearCombination left;
            for (const auto& u : rs) {
              if (weak_le(r, u) && weak_le(u, r2)) left.add(u, 1);
            }
            for (const auto& s : ss) {
              for (const auto& s2 : ss) {
                if (!weak_le(s, s2)) continue;
                LinearCombination right;
                for (const auto& v : ss) {
                  if (weak_le(s, v) && weak_le(v, s2)) right.add(v, 1);
                }
                const Relation lo = under_product(r, s);
                const Relation hi = over_product(r2, s2);
                LinearCombination expected;
                for_each_relation(total, [&](const Relation& t) {
                  if (weak_le(lo, t) && weak_le(t, hi)) expected.add(t, 1);
                });
                if (!probe.expect(product_of(left, right, Carrier::IRel) == expected, [&] {
                      return Json{{"lower", pair_json(r, s)}, {"upper", pair_json(r2, s2)}};
                    }))
                  return;
              }
            }
          }
        }
      }
    }});
  }
}

// ---------------------------------------------------------------- bases

void add_bases_checks(std::vector<Check>& checks, int n_max) {
  for (int total = 0; total <= std::min(n_max, 4); ++total) {
    checks.push_back({"bases.multiplicative.total" + std::to_string(total), [total](Probe& probe) {
      for (int m = 0; m <= total; ++m) {
        for (const auto& r : relations_of(m)) {
          for (const auto& s : relations_of(total - m)) {
            if (!probe.expect(e_product_check(r, s) && h_product_check(r, s), [&] { return pair_json(r, s); }))
              return;
          }
        }
      }
    }});
  }
  for (int n = 0; n <= std::min(n_max, 3); ++n) {
    checks.push_back({"bases.change_of_basis.n" + std::to_string(n), [n](Probe& probe) {
      const auto all = relations_of(n);
      for (const auto& r : all) {
        LinearCombination up;
        LinearCombination down;
        for (const auto& t : all) {
          if (weak_le(r, t)) up.add(t, 1);
          if (weak_le(t, r)) down.add(t, 1);
        }
        const auto e = e_from(r);
        const auto h = h_from(r);
        const auto f = ModuleElement::single(r);
        const bool ok = e.terms == up && h.terms == down && to_basis(e, Basis::E) == ModuleElement::single(r, Basis::E) &&
                        to_basis(h, Basis::H) == ModuleElement::single(r, Basis::H) &&
                        to_basis(to_basis(f, Basis::E), Basis::F) == f &&
                        to_basis(to_basis(f, Basis::H), Basis::F) == f;
        if (!probe.expect(ok, [&] { return to_json(r); })) return;
      }
    }});
  }
  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    checks.push_back({"bases.indecomposable_count.n" + std::to_string(n), [n](Probe& probe) {
      const auto counted = count_indecomposables(n);
      const auto series = inclusion_exclusion_in(n);
      probe.expect(counted == series, [&] { return Json{{"n", n}, {"enumerated", counted}, {"series", series}}; });
    }});
  }
  for (int n = 1; n <= std::min(n_max, 4); ++n) {
    checks.push_back({"bases.upper_ideal.n" + std::to_string(n), [n](Probe& probe) {
      for (const auto& r : relations_of(n)) {
        if (!is_under_indecomposable(r)) continue;
        for (const auto& s : upper_covers(r)) {
          if (!probe.expect(is_under_indecomposable(s), [&] { return pair_json(r, s); })) return;
        }
      }
    }});
  }
  for (int total = 2; total <= std::min(n_max, 3); ++total) {
    checks.push_back({"bases.unital_infinitesimal.total" + std::to_string(total), [total](Probe& probe) {
      for (int m = 1; m < total; ++m) {
        for (const auto& r : relations_of(m)) {
          for (const auto& s : relations_of(total - m)) {
            if (!probe.expect(unital_infinitesimal_check(r, s), [&] { return pair_json(r, s); })) return;
          }
        }
      }
    }});
  }
}

// ---------------------------------------------------------------- families

std::optional<std::int64_t> known_count(Family f, int n) {
  static const std::map<Family, std::vector<std::int64_t>> table = {
      {Family::WOEP, {1, 1, 2, 6, 24, 120}},   {Family::TOEP, {1, 1, 2, 5, 14, 42}},
      {Family::WOFP, {1, 1, 3, 13, 75, 541}},  {Family::TOFP, {1, 1, 3, 11, 45, 197}},
      {Family::TOIP, {1, 1, 3, 13, 68, 399}},  {Family::WOIP, {1, 1, 3, 17, 151, 1899}},
  };
  auto it = table.find(f);
  if (it == table.end() || n >= static_cast<int>(it->second.size())) return std::nullopt;
  return it->second[static_cast<std::size_t>(n)];
}

void add_family_checks(std::vector<Check>& checks, int n_max) {
  for (Family f : kAllFamilies) {
    const std::string tag(to_string(f));
    checks.push_back({"families.enumeration." + tag, [f, n_max](Probe& probe) {
      for (int n = 0; n <= std::min(n_max, 5); ++n) {
        const auto built = enumerate_family(n, f, EnumerationMode::Construct);
        if (n <= std::min(n_max, 4)) {
          const auto filtered = enumerate_family(n, f, EnumerationMode::Filter);
          if (!probe.expect(built == filtered, [&] {
                return Json{{"n", n}, {"construct", built.size()}, {"filter", filtered.size()}};
              }))
            return;
        }
        if (const auto expected = known_count(f, n)) {
          if (!probe.expect(static_cast<std::int64_t>(built.size()) == *expected, [&] {
                return Json{{"n", n}, {"count", built.size()}, {"expected", *expected}};
              }))
            return;
        }
      }
    }});
  }
  checks.push_back({"families.containment", [n_max](Probe& probe) {
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      for (const auto& p : posets_of(n)) {
        auto in = [&](Family f) { return is_in_family(p, f); };
        const bool ok = (!in(Family::WOEP) || in(Family::WOIP)) && (!in(Family::WOFP) || in(Family::WOIP)) &&
                        (!in(Family::TOEP) || in(Family::TOIP)) && (!in(Family::TOFP) || in(Family::TOIP)) &&
                        (in(Family::WOIP) == (in(Family::IWOIP) && in(Family::DWOIP)));
        if (!probe.expect(ok, [&] { return to_json(p); })) return;
      }
    }
  }});
  checks.push_back({"families.order_isomorphisms", [n_max](Probe& probe) {
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      const auto perms = all_permutations(n);
      for (const auto& a : perms) {
        if (!probe.expect(to_permutation(from_permutation(a)) == a, [&] { return to_json(a); })) return;
        for (const auto& b : perms) {
          if (!probe.expect(permutation_le(a, b) == weak_le(from_permutation(a), from_permutation(b)),
                            [&] { return Json{{"sigma", to_json(a)}, {"tau", to_json(b)}}; }))
            return;
        }
      }
      const auto trees = all_binary_trees(n);
      for (const auto& s : trees) {
        if (!probe.expect(to_binary_tree(from_binary_tree(s)) == s, [&] { return to_json(s); })) return;
        for (const auto& t : trees) {
          if (!probe.expect(tamari_le(s, t) == weak_le(from_binary_tree(s), from_binary_tree(t)),
                            [&] { return Json{{"s", to_json(s)}, {"t", to_json(t)}}; }))
            return;
        }
      }
    }
    for (int n = 0; n <= std::min(n_max, 3); ++n) {
      std::vector<std::pair<Permutation, Permutation>> intervals;
      for (const auto& a : all_permutations(n)) {
        for (const auto& b : all_permutations(n)) {
          if (permutation_le(a, b)) intervals.emplace_back(a, b);
        }
      }
      for (const auto& [a, a2] : intervals) {
        for (const auto& [b, b2] : intervals) {
          const bool lhs = weak_le(from_interval(a, a2), from_interval(b, b2));
          const bool rhs = permutation_le(a, b) && permutation_le(a2, b2);
          if (!probe.expect(lhs == rhs, [&] {
                return Json{{"first", {to_json(a), to_json(a2)}}, {"second", {to_json(b), to_json(b2)}}};
              }))
            return;
        }
      }
    }
  }});
  checks.push_back({"families.linear_extensions", [n_max](Probe& probe) {
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      for (const auto& p : posets_of(n)) {
        auto extends = [&](const Relation& e) {
          for (const auto& [u, v] : p.pairs()) {
            if (!e.contains(u, v)) return false;
          }
          return is_in_family(e, Family::WOEP);
        };
        if (is_in_family(p, Family::IWOIP)) {
          const Relation e = maxle(p);
          const bool ok = extends(e) && weak_le(p, e);
          if (!probe.expect(ok, [&] { return to_json(p); })) return;
        }
        if (is_in_family(p, Family::DWOIP)) {
          const Relation e = minle(p);
          const bool ok = extends(e) && weak_le(e, p);
          if (!probe.expect(ok, [&] { return to_json(p); })) return;
        }
      }
    }
  }});
  checks.push_back({"families.tamari_negative_control", [](Probe& probe) {
    const Relation bad = tamari_quotient_counterexample();
    const Relation one = Relation::from_pairs(1, {});
    const Relation dec = Relation::from_pairs(2, {{2, 1}});
    const auto conv = convolution(one, dec);
    const bool appears = std::find(conv.begin(), conv.end(), bad) != conv.end();
    bool factors_in = true;
    bool rejected = true;
    for (Family f : {Family::TOEP, Family::TOIP, Family::TOFP}) {
      factors_in = factors_in && is_in_family(one, f) && is_in_family(dec, f);
      rejected = rejected && !is_in_family(bad, f);
    }
    probe.expect(appears && factors_in && rejected && is_poset(bad), [&] { return to_json(bad); });
  }});
}

// ---------------------------------------------------------------- projections

const ProjectionMap kMaps[] = {ProjectionMap::IWOIPid, ProjectionMap::DWOIPdd, ProjectionMap::WOIPd,
                               ProjectionMap::TOIPd,   ProjectionMap::WOEPid,  ProjectionMap::WOEPdd};

void add_projection_checks(std::vector<Check>& checks, int n_max) {
  checks.push_back({"projections.idempotence_and_image", [n_max](Probe& probe) {
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      for (const auto& p : posets_of(n)) {
        for (ProjectionMap m : kMaps) {
          const Relation q = apply_projection(m, p);
          if (!probe.expect(apply_projection(m, q) == q && is_in_family(q, image_family(m)), [&] {
                return Json{{"map", std::string(to_string(m))}, {"rel", to_json(p)}};
              }))
            return;
        }
        const bool commute =
            iwoip_increasing_deletion(dwoip_decreasing_deletion(p)) ==
            dwoip_decreasing_deletion(iwoip_increasing_deletion(p));
        if (!probe.expect(commute, [&] { return to_json(p); })) return;
      }
    }
  }});
  checks.push_back({"projections.restriction_and_cuts", [n_max](Probe& probe) {
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      for (const auto& p : posets_of(n)) {
        for (ProjectionMap m : {ProjectionMap::IWOIPid, ProjectionMap::DWOIPdd, ProjectionMap::WOIPd}) {
          const Relation q = apply_projection(m, p);
          for (int lo = 1; lo <= n; ++lo) {
            for (int hi = lo; hi <= n; ++hi) {
              if (!probe.expect(apply_projection(m, restriction(p, lo, hi)) == restriction(q, lo, hi), [&] {
                    return Json{{"map", std::string(to_string(m))}, {"rel", to_json(p)}, {"interval", {lo, hi}}};
                  }))
                return;
            }
          }
        }
        const Relation w = woip_deletion(p);
        const auto cuts = total_cuts(p);
        if (!probe.expect(cuts == total_cuts(w), [&] { return to_json(p); })) return;
        for (const auto& cut : cuts) {
          const bool ok = woip_deletion(restriction(p, cut.x)) == restriction(w, cut.x) &&
                          woip_deletion(restriction(p, cut.y)) == restriction(w, cut.y) &&
                          is_total_cut(woep_id(p), cut.x) && is_total_cut(woep_dd(p), cut.x);
          if (!probe.expect(ok, [&] { return Json{{"rel", to_json(p)}, {"cut", cut.x}}; })) return;
        }
      }
    }
  }});
  checks.push_back({"projections.sylvester", [n_max](Probe& probe) {
    for (int n = 0; n <= std::min(n_max + 2, 6); ++n) {
      for (const auto& sigma : all_permutations(n)) {
        if (!probe.expect(projection_compatibility(sigma), [&] { return to_json(sigma); })) return;
      }
    }
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      const auto perms = all_permutations(n);
      for (const auto& a : perms) {
        for (const auto& b : perms) {
          if (!permutation_le(a, b)) continue;
          if (!probe.expect(projection_compatibility(a, b), [&] { return Json{to_json(a), to_json(b)}; })) return;
        }
      }
    }
    for (int n = 0; n <= std::min(n_max + 1, 5); ++n) {
      for (const auto& pi : all_ordered_partitions(n)) {
        if (!probe.expect(projection_compatibility(pi), [&] { return to_json(pi); })) return;
      }
    }
  }});
  checks.push_back({"projections.fibers", [n_max](Probe& probe) {
    const std::pair<ProjectionMap, Family> domains[] = {
        {ProjectionMap::IWOIPid, Family::IPos}, {ProjectionMap::DWOIPdd, Family::IPos},
        {ProjectionMap::WOIPd, Family::IPos},   {ProjectionMap::WOEPid, Family::IPos},
        {ProjectionMap::WOEPdd, Family::IPos},  {ProjectionMap::TOIPd, Family::IPos},
        {ProjectionMap::TOIPd, Family::WOEP},   {ProjectionMap::TOIPd, Family::WOIP},
        {ProjectionMap::TOIPd, Family::WOFP}};
    for (int n = 0; n <= std::min(n_max, 4); ++n) {
      for (const auto& [m, domain] : domains) {
        const auto table = fiber_table(m, domain, n);
        std::vector<Relation> covered;
        for (const auto& [target, members] : *table) {
          covered.insert(covered.end(), members.begin(), members.end());
          for (const auto& p : members) {
            if (!probe.expect(apply_projection(m, p) == target, [&] { return to_json(p); })) return;
          }
        }
        std::sort(covered.begin(), covered.end());
        const auto expected = enumerate_family(n, domain, EnumerationMode::Filter);
        if (!probe.expect(covered == expected, [&] {
              return Json{{"map", std::string(to_string(m))}, {"domain", std::string(to_string(domain))}, {"n", n}};
            }))
          return;
      }
    }
  }});
}

// ---------------------------------------------------------------- subalgebras

template <class Visit>
void for_each_family_pair(Family f, int total, Visit visit) {
  for (int m = 0; m <= total; ++m) {
    const auto left = enumerate_family(m, f, EnumerationMode::Construct);
    const auto right = enumerate_family(total - m, f, EnumerationMode::Construct);
    for (const auto& r : left) {
      for (const auto& s : right) {
        if (!visit(r, s)) return;
      }
    }
  }
}

TensorCombination tensor_multiply(Family f, const TensorCombination& a, const TensorCombination& b) {
  TensorCombination out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const auto left = quotient_basis_product(f, ka.first, kb.first);
      const auto right = quotient_basis_product(f, ka.second, kb.second);
      const Coeff scale = checked_mul(ca, cb);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) out.add({l, r}, checked_mul(scale, checked_mul(cl, cr)));
      }
    }
  }
  return out;
}

void add_subalgebra_checks(std::vector<Check>& checks, int n_max) {
  const int cap = std::min(n_max, 4);
  for (Subalgebra s : kAllSubalgebras) {
    const std::string tag(to_string(s));
    checks.push_back({"subalgebras.closure." + tag, [s, cap](Probe& probe) {
      const Family f = key_family(s);
      for (int total = 0; total <= cap; ++total) {
        bool keep = true;
        for_each_family_pair(f, total, [&](const Relation& a, const Relation& b) {
          try {
            const auto product = subalgebra_product(s, a, b);
            keep = probe.expect(product.terms == subalgebra_product_formula(s, a, b),
                                [&] { return pair_json(a, b); });
          } catch (const ClosureViolation& e) {
            probe.fail({{"factors", pair_json(a, b)}, {"error", e.what()}});
            keep = false;
          }
          return keep;
        });
        if (!keep) return;
        for (const auto& t : enumerate_family(total, f, EnumerationMode::Construct)) {
          try {
            const auto coproduct = subalgebra_coproduct(s, t);
            const bool tamari = f == Family::TOEP || f == Family::TOIP || f == Family::TOFP;
            if (!probe.expect(tamari || coproduct.terms == subalgebra_coproduct_formula(s, t),
                              [&] { return to_json(t); }))
              return;
          } catch (const ClosureViolation& e) {
            probe.fail({{"rel", to_json(t)}, {"error", e.what()}});
            return;
          }
        }
      }
    }});
  }
  checks.push_back({"subalgebras.toep_permutation_level", [n_max](Probe& probe) {
    for (int total = 0; total <= std::min(n_max + 2, 6); ++total) {
      const auto problem = toep_permutation_closure_counterexample(total);
      if (!probe.expect(!problem, [&] { return Json{{"total", total}, {"error", *problem}}; })) return;
    }
  }});
  for (Family f : {Family::IPos, Family::WOEP, Family::WOIP, Family::WOFP}) {
    const std::string tag(to_string(f));
    checks.push_back({"subalgebras.quotient_hopf." + tag, [f, cap](Probe& probe) {
      for (int total = 0; total <= cap; ++total) {
        bool keep = true;
        for_each_family_pair(f, total, [&](const Relation& a, const Relation& b) {
          const auto lhs = quotient_coproduct(quotient_product(FamilyElement::quotient(f, a),
                                                               FamilyElement::quotient(f, b)));
          const auto rhs = tensor_multiply(f, quotient_coproduct(FamilyElement::quotient(f, a)).terms,
                                           quotient_coproduct(FamilyElement::quotient(f, b)).terms);
          LinearCombination interval;
          const Relation lo = under_product(a, b);
          const Relation hi = over_product(a, b);
          for (const auto& t : enumerate_family(total, f, EnumerationMode::Construct)) {
            if (weak_le(lo, t) && weak_le(t, hi)) interval.add(t, 1);
          }
          keep = probe.expect(lhs.terms == rhs && quotient_basis_product(f, a, b) == interval,
                              [&] { return pair_json(a, b); });
          return keep;
        });
        if (!keep) return;
      }
    }});
  }
  const std::pair<Family, Subalgebra> iso[] = {
      {Family::WOIP, Subalgebra::WOIP}, {Family::WOEP, Subalgebra::WOEPid}, {Family::WOEP, Subalgebra::WOEPdd}};
  for (const auto& [f, s] : iso) {
    const std::string tag = std::string(to_string(f)) + "-" + std::string(to_string(s));
    checks.push_back({"subalgebras.quotient_vs_fiber_sum." + tag, [f = f, s = s, cap](Probe& probe) {
      for (int total = 0; total <= cap; ++total) {
        bool keep = true;
        for_each_family_pair(f, total, [&](const Relation& a, const Relation& b) {
          keep = probe.expect(quotient_basis_product(f, a, b) == subalgebra_product(s, a, b).terms,
                              [&] { return pair_json(a, b); });
          return keep;
        });
        if (!keep) return;
        for (const auto& t : enumerate_family(total, f, EnumerationMode::Construct)) {
          const auto q = quotient_coproduct(FamilyElement::quotient(f, t)).terms;
          if (!probe.expect(q == subalgebra_coproduct(s, t).terms, [&] { return to_json(t); })) return;
        }
      }
    }});
  }
  for (Pairing p : {Pairing::MalvenutoReutenauer, Pairing::Chapoton, Pairing::LodayRonco,
                    Pairing::ChapotonSchroder}) {
    checks.push_back({"subalgebras.isomorphism." + std::string(to_string(p)), [p, cap](Probe& probe) {
      const auto problem = isomorphism_counterexample(p, cap);
      probe.expect(!problem, [&] { return Json{{"error", *problem}}; });
    }});
  }
  checks.push_back({"subalgebras.tamari_quotient_refused", [](Probe& probe) {
    for (Family f : {Family::TOEP, Family::TOIP, Family::TOFP}) {
      bool refused = false;
      try {
        quotient_product(FamilyElement::quotient(f, Relation::from_pairs(1, {})),
                         FamilyElement::quotient(f, Relation::from_pairs(2, {{2, 1}})));
      } catch (const UnsupportedFamily&) {
        refused = true;
      }
      if (!probe.expect(refused, [&] { return Json{{"family", std::string(to_string(f))}}; })) return;
    }
  }});
}

std::vector<Check> checks_for(const std::string& suite, int n_max) {
  std::vector<Check> checks;
  const bool all = suite == "all";
  if (all || suite == "lattice") add_lattice_checks(checks, n_max);
  if (all || suite == "hopf") add_hopf_checks(checks, n_max);
  if (all || suite == "bases") add_bases_checks(checks, n_max);
  if (all || suite == "families") add_family_checks(checks, n_max);
  if (all || suite == "projections") add_projection_checks(checks, n_max);
  if (all || suite == "subalgebras") add_subalgebra_checks(checks, n_max);
  return checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice",     "hopf",        "bases", "families",
                                                 "projections", "subalgebras", "all"};
  return names;
}

int default_n_max(const std::string& suite) { return suite == "lattice" ? 3 : 4; }

VerificationReport run_suite(const std::string& suite, int n_max, int jobs) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (n_max < 0 || n_max > 6) throw InputError("n-max must lie in 0..6");
  const auto start = std::chrono::steady_clock::now();
  const auto checks = checks_for(suite, n_max);

  struct Outcome {
    std::int64_t count = 0;
    std::optional<Json> failure;
  };
  std::vector<Outcome> outcomes(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      Probe probe;
      try {
        checks[i].run(probe);
      } catch (const std::exception& e) {
        probe.fail({{"error", e.what()}});
      }
      outcomes[i] = {probe.count(), probe.failure()};
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerificationReport report;
  report.suite = suite;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    report.checks += outcomes[i].count;
    if (outcomes[i].failure) report.failures.push_back({checks[i].id, *outcomes[i].failure});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back({{"check", f.check}, {"counterexample", f.counterexample}});
  return {{"suite", report.suite},
          {"checks", report.checks},
          {"passed", report.passed()},
          {"failures", failures},
          {"seconds", report.seconds}};
}

}  // namespace intrel
