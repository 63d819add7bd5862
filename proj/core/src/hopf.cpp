#include "intrel/hopf.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "intrel/config.hpp"

namespace intrel {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::F: return "F";
    case Basis::E: return "E";
    case Basis::H: return "H";
  }
  return "?";
}

std::string_view to_string(Carrier c) { return c == Carrier::IRel ? "IRel" : "IPos"; }

Basis parse_basis(std::string_view text) {
  if (text == "F") return Basis::F;
  if (text == "E") return Basis::E;
  if (text == "H") return Basis::H;
  throw InputError("unknown basis '" + std::string(text) + "' (expected F, E or H)");
}

Carrier parse_carrier(std::string_view text) {
  if (text == "IRel") return Carrier::IRel;
  if (text == "IPos") return Carrier::IPos;
  throw InputError("unknown carrier '" + std::string(text) + "' (expected IRel or IPos)");
}

ModuleElement ModuleElement::single(const Relation& r, Basis basis, Carrier carrier, Coeff c) {
  ModuleElement out{basis, carrier, {}};
  out.terms.add(r, c);
  return out;
}

void validate(const ModuleElement& a) {
  if (a.carrier != Carrier::IPos) return;
  for (const auto& [key, c] : a.terms) {
    if (!is_poset(key)) throw InputError("IPos element has a non-poset key");
  }
}

void validate(const TensorElement& a) {
  if (a.carrier != Carrier::IPos) return;
  for (const auto& [key, c] : a.terms) {
    if (!is_poset(key.first) || !is_poset(key.second)) {
      throw InputError("IPos tensor has a non-poset key");
    }
  }
}

namespace {

void require_f(Basis b, const char* what) {
  if (b != Basis::F) throw InputError(std::string(what) + " expects F-basis input");
}

void require_same_carrier(Carrier a, Carrier b, const char* what) {
  if (a != b) throw InputError(std::string(what) + ": mixed carriers");
}

void require_poset_for(Carrier carrier, const Relation& r, const char* what) {
  if (carrier == Carrier::IPos && !is_poset(r)) {
    throw InputError(std::string(what) + ": IPos carrier needs poset arguments");
  }
}

}  // namespace

LinearCombination shuffle_product(const Relation& r, const Relation& s, Carrier carrier) {
  LinearCombination out;
  const bool posets_only = carrier == Carrier::IPos;
  for_each_shifted_shuffle(r, s, [&](const Relation& t) {
    if (!posets_only || is_poset(t)) out.add(t, 1);
    return true;
  });
  return out;
}

ModuleElement f_product(const ModuleElement& a, const ModuleElement& b) {
  require_f(a.basis, "f_product");
  require_f(b.basis, "f_product");
  require_same_carrier(a.carrier, b.carrier, "f_product");
  ModuleElement out{Basis::F, a.carrier, {}};
  for (const auto& [r, cr] : a.terms) {
    for (const auto& [s, cs] : b.terms) {
      const Coeff scale = checked_mul(cr, cs);
      for (const auto& [t, ct] : shuffle_product(r, s, a.carrier)) {
        out.terms.add(t, checked_mul(scale, ct));
      }
    }
  }
  return out;
}

TensorCombination cut_coproduct(const Relation& t) {
  TensorCombination out;
  for (const auto& cut : total_cuts(t)) {
    out.add({restriction(t, cut.x), restriction(t, cut.y)}, 1);
  }
  return out;
}

TensorElement f_coproduct(const ModuleElement& a) {
  require_f(a.basis, "f_coproduct");
  TensorElement out{Basis::F, a.carrier, {}};
  for (const auto& [t, c] : a.terms) {
    for (const auto& [key, k] : cut_coproduct(t)) out.terms.add(key, checked_mul(c, k));
  }
  return out;
}

TensorElement tensor_product(const TensorElement& p, const TensorElement& q) {
  require_f(p.basis, "tensor_product");
  require_f(q.basis, "tensor_product");
  require_same_carrier(p.carrier, q.carrier, "tensor_product");
  TensorElement out{Basis::F, p.carrier, {}};
  for (const auto& [pk, pc] : p.terms) {
    for (const auto& [qk, qc] : q.terms) {
      const Coeff scale = checked_mul(pc, qc);
      const auto left = shuffle_product(pk.first, qk.first, p.carrier);
      const auto right = shuffle_product(pk.second, qk.second, p.carrier);
      for (const auto& [l, lc] : left) {
        for (const auto& [r, rc] : right) {
          out.terms.add({l, r}, checked_mul(scale, checked_mul(lc, rc)));
        }
      }
    }
  }
  return out;
}

Combination<TripleKey> left_iterated_coproduct(const Relation& t) {
  Combination<TripleKey> out;
  for (const auto& [xy, c] : cut_coproduct(t)) {
    for (const auto& [ab, k] : cut_coproduct(xy.first)) {
      out.add({ab.first, {ab.second, xy.second}}, checked_mul(c, k));
    }
  }
  return out;
}

Combination<TripleKey> right_iterated_coproduct(const Relation& t) {
  Combination<TripleKey> out;
  for (const auto& [xy, c] : cut_coproduct(t)) {
    for (const auto& [ab, k] : cut_coproduct(xy.second)) {
      out.add({xy.first, {ab.first, ab.second}}, checked_mul(c, k));
    }
  }
  return out;
}

bool hopf_compatible(const Relation& r, const Relation& s, Carrier carrier) {
  require_poset_for(carrier, r, "hopf_compatible");
  require_poset_for(carrier, s, "hopf_compatible");
  const auto lhs = f_coproduct(f_product(ModuleElement::single(r, Basis::F, carrier),
                                         ModuleElement::single(s, Basis::F, carrier)));
  const auto rhs = tensor_product(f_coproduct(ModuleElement::single(r, Basis::F, carrier)),
                                  f_coproduct(ModuleElement::single(s, Basis::F, carrier)));
  return lhs.terms == rhs.terms;
}

namespace {

// Relations reachable from r by freely toggling the listed pairs.
ModuleElement toggle_closure(const Relation& r, const std::vector<Pair>& free, Carrier carrier) {
  ModuleElement out{Basis::F, carrier, {}};
  const std::uint32_t total = 1u << free.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    Relation s = r;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (!((mask >> k) & 1u)) continue;
      const auto [u, v] = free[k];
      if (s.contains(u, v)) {
        s.erase(u, v);
      } else {
        s.insert(u, v);
      }
    }
    if (carrier == Carrier::IRel || is_poset(s)) out.terms.add(s, 1);
  }
  return out;
}

}  // namespace

ModuleElement e_from(const Relation& r, Carrier carrier) {
  require_enumerable(r.size(), "e_from");
  std::vector<Pair> free;
  for (int a = 1; a <= r.size(); ++a) {
    for (int b = a + 1; b <= r.size(); ++b) {
      if (r.contains(a, b)) free.emplace_back(a, b);
      if (!r.contains(b, a)) free.emplace_back(b, a);
    }
  }
  return toggle_closure(r, free, carrier);
}

ModuleElement h_from(const Relation& r, Carrier carrier) {
  require_enumerable(r.size(), "h_from");
  std::vector<Pair> free;
  for (int a = 1; a <= r.size(); ++a) {
    for (int b = a + 1; b <= r.size(); ++b) {
      if (!r.contains(a, b)) free.emplace_back(a, b);
      if (r.contains(b, a)) free.emplace_back(b, a);
    }
  }
  return toggle_closure(r, free, carrier);
}

namespace {

ModuleElement expand_to_f(const ModuleElement& a) {
  if (a.basis == Basis::F) return a;
  ModuleElement out{Basis::F, a.carrier, {}};
  for (const auto& [key, c] : a.terms) {
    const auto expansion = a.basis == Basis::E ? e_from(key, a.carrier) : h_from(key, a.carrier);
    for (const auto& [t, k] : expansion.terms) out.terms.add(t, checked_mul(c, k));
  }
  return out;
}

ModuleElement peel_from_f(const ModuleElement& a, Basis target) {
  ModuleElement out{target, a.carrier, {}};
  LinearCombination working = a.terms;
  const bool lowest_first = target == Basis::E;
  while (!working.empty()) {
    auto pick = working.begin();
    int pick_rank = weak_rank(pick->first);
    for (auto it = std::next(working.begin()); it != working.end(); ++it) {
      const int rank = weak_rank(it->first);
      if (lowest_first ? rank < pick_rank : rank > pick_rank) {
        pick = it;
        pick_rank = rank;
      }
    }
    const Relation key = pick->first;
    const Coeff c = pick->second;
    out.terms.add(key, c);
    auto expansion = (target == Basis::E ? e_from(key, a.carrier) : h_from(key, a.carrier)).terms;
    expansion *= c;
    working -= expansion;
  }
  return out;
}

}  // namespace

ModuleElement to_basis(const ModuleElement& a, Basis target) {
  if (a.basis == target) return a;
  const ModuleElement in_f = expand_to_f(a);
  if (target == Basis::F) return in_f;
  return peel_from_f(in_f, target);
}

bool e_product_check(const Relation& r, const Relation& s, Carrier carrier) {
  const auto lhs = f_product(e_from(r, carrier), e_from(s, carrier));
  return lhs.terms == e_from(under_product(r, s), carrier).terms;
}

bool h_product_check(const Relation& r, const Relation& s, Carrier carrier) {
  const auto lhs = f_product(h_from(r, carrier), h_from(s, carrier));
  return lhs.terms == h_from(over_product(r, s), carrier).terms;
}

TensorElement bar_coproduct_e(const Relation& t, bool reduced) {
  TensorElement out{Basis::E, Carrier::IRel, {}};
  const int n = t.size();
  for (int i : primitive_cuts(t)) {
    if (reduced && (i == 0 || i == n)) continue;
    out.terms.add({restriction(t, 1, i), restriction(t, i + 1, n)}, 1);
  }
  return out;
}

TensorElement bar_coproduct(const ModuleElement& a, bool reduced) {
  if (a.basis != Basis::E) throw InputError("bar_coproduct expects E-basis input");
  TensorElement out{Basis::E, a.carrier, {}};
  for (const auto& [t, c] : a.terms) {
    for (const auto& [key, k] : bar_coproduct_e(t, reduced).terms) {
      out.terms.add(key, checked_mul(c, k));
    }
  }
  return out;
}

TensorElement tensor_to_f(const TensorElement& p) {
  if (p.basis == Basis::F) return p;
  TensorElement out{Basis::F, p.carrier, {}};
  for (const auto& [key, c] : p.terms) {
    const auto left = expand_to_f(ModuleElement::single(key.first, p.basis, p.carrier));
    const auto right = expand_to_f(ModuleElement::single(key.second, p.basis, p.carrier));
    for (const auto& [l, lc] : left.terms) {
      for (const auto& [r, rc] : right.terms) {
        out.terms.add({l, r}, checked_mul(c, checked_mul(lc, rc)));
      }
    }
  }
  return out;
}

bool unital_infinitesimal_check(const Relation& r, const Relation& s) {
  if (r.size() == 0 || s.size() == 0) {
    throw InputError("unital_infinitesimal_check needs two relations of positive size");
  }
  const Relation unit(0);
  const auto x = e_from(r);
  const auto y = e_from(s);
  const auto xy_in_e = to_basis(f_product(x, y), Basis::E);
  const auto lhs = tensor_to_f(bar_coproduct(xy_in_e, true));

  auto simple_tensor = [](const Relation& a, const Relation& b) {
    TensorElement t{Basis::E, Carrier::IRel, {}};
    t.terms.add({a, b}, 1);
    return tensor_to_f(t);
  };
  TensorElement rhs = tensor_product(simple_tensor(r, unit), tensor_to_f(bar_coproduct_e(s, true)));
  rhs.terms += tensor_product(tensor_to_f(bar_coproduct_e(r, true)), simple_tensor(unit, s)).terms;
  rhs.terms += simple_tensor(r, s).terms;
  return lhs.terms == rhs.terms;
}

std::int64_t relation_total(int n) { return static_cast<std::int64_t>(relation_count(n)); }

std::int64_t count_indecomposables(int n) {
  if (n < 1) throw InputError("count_indecomposables needs n >= 1");
  require_enumerable(n, "count_indecomposables");
  const std::uint64_t total = relation_count(n);
  std::int64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (is_under_indecomposable(Relation::from_code(n, code))) ++count;
  }
  return count;
}

std::int64_t inclusion_exclusion_in(int n) {
  if (n < 1) throw InputError("inclusion_exclusion_in needs n >= 1");
  if (n > 8) throw LimitError("inclusion_exclusion_in: 64-bit range ends at n = 8");
  std::int64_t sum = 0;
  // bit g of `gaps` set means a part ends after position g+1
  for (std::uint32_t gaps = 0; gaps < (1u << (n - 1)); ++gaps) {
    std::int64_t product = 1;
    int parts = 0;
    int start = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (pos == n || ((gaps >> (pos - 1)) & 1u)) {
        product = checked_mul(product, relation_total(pos - start));
        start = pos;
        ++parts;
      }
    }
    sum = checked_add(sum, parts % 2 == 1 ? product : checked_mul(product, -1));
  }
  return sum;
}

}  // namespace intrel
