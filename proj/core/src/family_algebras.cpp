#include "intrel/family_algebras.hpp"

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "intrel/classical.hpp"

namespace intrel {

std::string_view to_string(Style s) { return s == Style::Quotient ? "quotient" : "fiber-sum"; }

Style parse_style(std::string_view text) {
  if (text == "quotient") return Style::Quotient;
  if (text == "fiber-sum") return Style::FiberSum;
  throw InputError("unknown style '" + std::string(text) + "' (expected quotient or fiber-sum)");
}

std::string_view to_string(Subalgebra s) {
  switch (s) {
    case Subalgebra::WOIP: return "WOIP";
    case Subalgebra::IWOIP: return "IWOIP";
    case Subalgebra::DWOIP: return "DWOIP";
    case Subalgebra::WOEPid: return "WOEPid";
    case Subalgebra::WOEPdd: return "WOEPdd";
    case Subalgebra::TOEP: return "TOEP";
    case Subalgebra::TOIP: return "TOIP";
    case Subalgebra::TOFP: return "TOFP";
  }
  return "?";
}

Subalgebra parse_subalgebra(std::string_view text) {
  for (Subalgebra s : kAllSubalgebras) {
    if (to_string(s) == text) return s;
  }
  throw InputError("unknown fiber-sum family '" + std::string(text) +
                   "' (expected WOIP, IWOIP, DWOIP, WOEPid, WOEPdd, TOEP, TOIP or TOFP)");
}

Family key_family(Subalgebra s) {
  switch (s) {
    case Subalgebra::WOIP: return Family::WOIP;
    case Subalgebra::IWOIP: return Family::IWOIP;
    case Subalgebra::DWOIP: return Family::DWOIP;
    case Subalgebra::WOEPid:
    case Subalgebra::WOEPdd: return Family::WOEP;
    case Subalgebra::TOEP: return Family::TOEP;
    case Subalgebra::TOIP: return Family::TOIP;
    case Subalgebra::TOFP: return Family::TOFP;
  }
  return Family::IPos;
}

Family ambient_family(Subalgebra s) {
  switch (s) {
    case Subalgebra::TOEP: return Family::WOEP;
    case Subalgebra::TOIP: return Family::WOIP;
    case Subalgebra::TOFP: return Family::WOFP;
    default: return Family::IPos;
  }
}

ProjectionMap projection_of(Subalgebra s) {
  switch (s) {
    case Subalgebra::WOIP: return ProjectionMap::WOIPd;
    case Subalgebra::IWOIP: return ProjectionMap::IWOIPid;
    case Subalgebra::DWOIP: return ProjectionMap::DWOIPdd;
    case Subalgebra::WOEPid: return ProjectionMap::WOEPid;
    case Subalgebra::WOEPdd: return ProjectionMap::WOEPdd;
    default: return ProjectionMap::TOIPd;
  }
}

FamilyElement FamilyElement::quotient(Family f, const Relation& r, Coeff c) {
  FamilyElement out;
  out.style = Style::Quotient;
  out.family = f;
  out.terms.add(r, c);
  return out;
}

FamilyElement FamilyElement::fiber_sum(Subalgebra s, const Relation& r, Coeff c) {
  FamilyElement out;
  out.style = Style::FiberSum;
  out.family = key_family(s);
  out.subalgebra = s;
  out.terms.add(r, c);
  return out;
}

void validate(const FamilyElement& a) {
  for (const auto& [key, c] : a.terms) {
    if (!is_in_family(key, a.family)) {
      throw InputError("element key is not a member of " + std::string(to_string(a.family)));
    }
  }
}

bool supports_quotient(Family f) {
  return f != Family::TOEP && f != Family::TOIP && f != Family::TOFP;
}

Relation tamari_quotient_counterexample() { return Relation::from_pairs(3, {{1, 2}, {1, 3}, {3, 2}}); }

std::string tamari_quotient_refusal(Family f) {
  return "no quotient algebra on " + std::string(to_string(f)) +
         ": the non-members do not span a Hopf ideal. The poset {(1,2),(1,3),(3,2)} appears in "
         "the convolution of the size-1 poset with {(2,1)}, both Tamari-family posets, yet it "
         "is neither a TOEP, a TOIP nor a TOFP. Use --style fiber-sum instead.";
}

namespace {

void require_member(const Relation& r, Family f, const char* what) {
  if (!is_in_family(r, f)) {
    throw InputError(std::string(what) + ": relation is not a member of " + std::string(to_string(f)));
  }
}

}  // namespace

LinearCombination quotient_basis_product(Family f, const Relation& r, const Relation& s) {
  if (!supports_quotient(f)) throw UnsupportedFamily(tamari_quotient_refusal(f));
  require_member(r, f, "quotient_basis_product");
  require_member(s, f, "quotient_basis_product");

  using Key = std::tuple<Family, Relation, Relation>;
  static std::shared_mutex guard;
  static std::map<Key, LinearCombination> memo;
  const Key key{f, r, s};
  {
    std::shared_lock read(guard);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  LinearCombination out;
  for_each_shifted_shuffle(r, s, [&](const Relation& t) {
    if (is_in_family(t, f)) out.add(t, 1);
    return true;
  });
  std::unique_lock write(guard);
  memo.emplace(key, out);
  return out;
}

FamilyElement quotient_product(const FamilyElement& a, const FamilyElement& b) {
  if (a.style != Style::Quotient || b.style != Style::Quotient) {
    throw InputError("quotient_product expects quotient-style elements");
  }
  if (a.family != b.family) throw InputError("quotient_product: mixed families");
  if (!supports_quotient(a.family)) throw UnsupportedFamily(tamari_quotient_refusal(a.family));
  FamilyElement out;
  out.style = Style::Quotient;
  out.family = a.family;
  for (const auto& [r, cr] : a.terms) {
    for (const auto& [s, cs] : b.terms) {
      const Coeff scale = checked_mul(cr, cs);
      for (const auto& [t, ct] : quotient_basis_product(a.family, r, s)) {
        out.terms.add(t, checked_mul(scale, ct));
      }
    }
  }
  return out;
}

FamilyTensor quotient_coproduct(const FamilyElement& a) {
  if (a.style != Style::Quotient) throw InputError("quotient_coproduct expects a quotient-style element");
  if (!supports_quotient(a.family)) throw UnsupportedFamily(tamari_quotient_refusal(a.family));
  validate(a);
  FamilyTensor out;
  out.style = Style::Quotient;
  out.family = a.family;
  for (const auto& [t, c] : a.terms) {
    for (const auto& [key, k] : cut_coproduct(t)) {
      if (!is_in_family(key.first, a.family) || !is_in_family(key.second, a.family)) {
        throw ClosureViolation("coproduct of a family member left the family");
      }
      out.terms.add(key, checked_mul(c, k));
    }
  }
  return out;
}

ModuleElement fiber_sum_element(Subalgebra s, const Relation& target) {
  require_member(target, key_family(s), "fiber_sum_element");
  ModuleElement out{Basis::F, Carrier::IPos, {}};
  for (const auto& p : fiber(projection_of(s), target, ambient_family(s))) out.terms.add(p, 1);
  return out;
}

LinearCombination expand_fiber_sums(Subalgebra s, const LinearCombination& labels) {
  LinearCombination out;
  for (const auto& [t, c] : labels) {
    for (const auto& [p, k] : fiber_sum_element(s, t).terms) out.add(p, checked_mul(c, k));
  }
  return out;
}

namespace {

std::string describe(const Relation& r) {
  std::ostringstream os;
  os << "{n=" << r.size() << ":";
  for (const auto& [u, v] : r.pairs()) os << " (" << u << "," << v << ")";
  os << "}";
  return os.str();
}

}  // namespace

FamilyElement recollect(Subalgebra s, const LinearCombination& ambient) {
  FamilyElement out;
  out.style = Style::FiberSum;
  out.family = key_family(s);
  out.subalgebra = s;
  const ProjectionMap map = projection_of(s);
  const Family domain = ambient_family(s);
  for (const auto& [p, c] : ambient) {
    if (!is_in_family(p, domain)) {
      throw ClosureViolation("ambient term " + describe(p) + " is outside " +
                             std::string(to_string(domain)));
    }
    const Relation label = apply_projection(map, p);
    if (out.terms.coeff(label) == 0) out.terms.add(label, c);
  }
  LinearCombination residue = ambient;
  residue -= expand_fiber_sums(s, out.terms);
  if (!residue.empty()) {
    throw ClosureViolation("residue outside the " + std::string(to_string(s)) +
                           " fiber-sum span, first term " + describe(residue.begin()->first));
  }
  return out;
}

FamilyElement subalgebra_product(Subalgebra s, const Relation& t1, const Relation& t2) {
  const ModuleElement left = fiber_sum_element(s, t1);
  const ModuleElement right = fiber_sum_element(s, t2);
  const Family ambient = ambient_family(s);
  LinearCombination product;
  for (const auto& [p, cp] : left.terms) {
    for (const auto& [q, cq] : right.terms) {
      const Coeff scale = checked_mul(cp, cq);
      for (const auto& [r, cr] : quotient_basis_product(ambient, p, q)) {
        product.add(r, checked_mul(scale, cr));
      }
    }
  }
  return recollect(s, product);
}

FamilyElement subalgebra_product(const FamilyElement& a, const FamilyElement& b) {
  if (a.style != Style::FiberSum || b.style != Style::FiberSum) {
    throw InputError("subalgebra_product expects fiber-sum elements");
  }
  if (a.subalgebra != b.subalgebra) throw InputError("subalgebra_product: mixed families");
  FamilyElement out;
  out.style = Style::FiberSum;
  out.family = key_family(a.subalgebra);
  out.subalgebra = a.subalgebra;
  for (const auto& [r, cr] : a.terms) {
    for (const auto& [s, cs] : b.terms) {
      const Coeff scale = checked_mul(cr, cs);
      for (const auto& [t, ct] : subalgebra_product(a.subalgebra, r, s).terms) {
        out.terms.add(t, checked_mul(scale, ct));
      }
    }
  }
  return out;
}

LinearCombination subalgebra_product_formula(Subalgebra s, const Relation& t1, const Relation& t2) {
  const Family f = key_family(s);
  require_member(t1, f, "subalgebra_product_formula");
  require_member(t2, f, "subalgebra_product_formula");
  LinearCombination out;
  for_each_shifted_shuffle(t1, t2, [&](const Relation& t) {
    if (is_in_family(t, f)) out.add(t, 1);
    return true;
  });
  return out;
}

FamilyTensor subalgebra_coproduct(Subalgebra s, const Relation& t) {
  require_member(t, key_family(s), "subalgebra_coproduct");
  const ProjectionMap map = projection_of(s);
  const Family domain = ambient_family(s);
  TensorCombination ambient;
  for (const auto& [p, c] : fiber_sum_element(s, t).terms) {
    for (const auto& [key, k] : cut_coproduct(p)) {
      if (!is_in_family(key.first, domain) || !is_in_family(key.second, domain)) {
        throw ClosureViolation("coproduct of " + describe(p) + " left " + std::string(to_string(domain)));
      }
      ambient.add(key, checked_mul(c, k));
    }
  }

  FamilyTensor out;
  out.style = Style::FiberSum;
  out.family = key_family(s);
  out.subalgebra = s;
  for (const auto& [key, c] : ambient) {
    const RelationPair label{apply_projection(map, key.first), apply_projection(map, key.second)};
    if (out.terms.coeff(label) == 0) out.terms.add(label, c);
  }
  TensorCombination residue = ambient;
  for (const auto& [key, c] : out.terms) {
    const auto left = fiber_sum_element(s, key.first);
    const auto right = fiber_sum_element(s, key.second);
    for (const auto& [l, lc] : left.terms) {
      for (const auto& [r, rc] : right.terms) residue.add({l, r}, -checked_mul(c, checked_mul(lc, rc)));
    }
  }
  if (!residue.empty()) {
    throw ClosureViolation("coproduct of the " + std::string(to_string(s)) + " fiber sum of " + describe(t) +
                           " does not split into fiber sums");
  }
  return out;
}

TensorCombination subalgebra_coproduct_formula(Subalgebra s, const Relation& t) {
  require_member(t, key_family(s), "subalgebra_coproduct_formula");
  return cut_coproduct(t);
}

FamilyTensor subalgebra_coproduct(const FamilyElement& a) {
  if (a.style != Style::FiberSum) throw InputError("subalgebra_coproduct expects a fiber-sum element");
  FamilyTensor out;
  out.style = Style::FiberSum;
  out.family = key_family(a.subalgebra);
  out.subalgebra = a.subalgebra;
  for (const auto& [t, c] : a.terms) {
    for (const auto& [key, k] : subalgebra_coproduct(a.subalgebra, t).terms) {
      out.terms.add(key, checked_mul(c, k));
    }
  }
  return out;
}

std::string_view to_string(Pairing p) {
  switch (p) {
    case Pairing::MalvenutoReutenauer: return "MR-WOEP";
    case Pairing::Chapoton: return "Chapoton-WOFP";
    case Pairing::LodayRonco: return "LodayRonco-TOEP";
    case Pairing::ChapotonSchroder: return "ChapotonSchroder-TOFP";
  }
  return "?";
}

namespace {

template <class Obj, class ToRelation>
LinearCombination image_sum(const std::vector<Obj>& objects, ToRelation to_relation) {
  LinearCombination out;
  for (const auto& o : objects) out.add(to_relation(o), 1);
  return out;
}

// Rewrites an object-level combination as a combination of fiber labels,
// requiring each fiber to appear whole with a single coefficient.
template <class Obj, class Label>
std::optional<std::map<Label, Coeff>> collect_fibers(const std::map<Obj, Coeff>& ambient,
                                                     const std::map<Obj, Label>& label_of,
                                                     const std::map<Label, std::vector<Obj>>& fibers) {
  std::map<Label, Coeff> out;
  for (const auto& [o, c] : ambient) out.emplace(label_of.at(o), c);
  std::size_t covered = 0;
  for (const auto& [label, c] : out) {
    for (const auto& o : fibers.at(label)) {
      auto it = ambient.find(o);
      if (it == ambient.end() || it->second != c) return std::nullopt;
      ++covered;
    }
  }
  if (covered != ambient.size()) return std::nullopt;
  return out;
}

template <class Obj>
struct FiberIndex {
  std::map<Obj, BinaryTree> bt;
  std::map<BinaryTree, std::vector<Obj>> fibers;
};

std::optional<std::string> check_mr(int n_max) {
  for (int total = 0; total <= n_max; ++total) {
    for (int m = 0; m <= total; ++m) {
      for (const auto& sigma : all_permutations(m)) {
        for (const auto& tau : all_permutations(total - m)) {
          const Relation r = from_permutation(sigma);
          const Relation s = from_permutation(tau);
          const auto expected = image_sum(classical::shifted_shuffle(sigma, tau), from_permutation);
          if (!(expected == quotient_basis_product(Family::WOEP, r, s))) {
            return "permutation shuffle differs from the WOEP product at " + describe(r) + " x " + describe(s);
          }
          const auto conv = image_sum(classical::convolution(sigma, tau), from_permutation);
          if (!(conv == image_sum(convolution(r, s), [](const Relation& t) { return t; }))) {
            return "permutation convolution differs at " + describe(r) + " x " + describe(s);
          }
        }
      }
    }
    for (const auto& rho : all_permutations(total)) {
      TensorCombination expected;
      for (const auto& [a, b] : classical::deconcatenations(rho)) {
        expected.add({from_permutation(a), from_permutation(b)}, 1);
      }
      if (!(expected == quotient_coproduct(FamilyElement::quotient(Family::WOEP, from_permutation(rho))).terms)) {
        return "deconcatenation differs from the WOEP coproduct at " + describe(from_permutation(rho));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_chapoton(int n_max) {
  for (int total = 0; total <= n_max; ++total) {
    for (int m = 0; m <= total; ++m) {
      for (const auto& pi : all_ordered_partitions(m)) {
        for (const auto& rho : all_ordered_partitions(total - m)) {
          const Relation r = from_ordered_partition(pi);
          const Relation s = from_ordered_partition(rho);
          const auto expected = image_sum(classical::shifted_shuffle(pi, rho), from_ordered_partition);
          if (!(expected == quotient_basis_product(Family::WOFP, r, s))) {
            return "ordered-partition shuffle differs from the WOFP product at " + describe(r) + " x " +
                   describe(s);
          }
          const auto conv = image_sum(classical::convolution(pi, rho), from_ordered_partition);
          if (!(conv == image_sum(convolution(r, s), [](const Relation& t) { return t; }))) {
            return "ordered-partition convolution differs at " + describe(r) + " x " + describe(s);
          }
        }
      }
    }
    for (const auto& pi : all_ordered_partitions(total)) {
      TensorCombination expected;
      for (const auto& [a, b] : classical::deconcatenations(pi)) {
        expected.add({from_ordered_partition(a), from_ordered_partition(b)}, 1);
      }
      const auto actual = quotient_coproduct(FamilyElement::quotient(Family::WOFP, from_ordered_partition(pi)));
      if (!(expected == actual.terms)) {
        return "block deconcatenation differs from the WOFP coproduct at " +
               describe(from_ordered_partition(pi));
      }
    }
  }
  return std::nullopt;
}

FiberIndex<Permutation> bst_index(int n) {
  FiberIndex<Permutation> index;
  for (const auto& sigma : all_permutations(n)) {
    const BinaryTree t = bst_insert(sigma);
    index.bt.emplace(sigma, t);
    index.fibers[t].push_back(sigma);
  }
  return index;
}

std::optional<std::string> check_loday_ronco(int n_max) {
  std::vector<FiberIndex<Permutation>> index;
  for (int n = 0; n <= n_max; ++n) index.push_back(bst_index(n));
  for (int total = 0; total <= n_max; ++total) {
    for (int m = 0; m <= total; ++m) {
      for (const auto& s : all_binary_trees(m)) {
        for (const auto& t : all_binary_trees(total - m)) {
          const auto expected = image_sum(classical::tamari_product(s, t), from_binary_tree);
          const auto actual = subalgebra_product(Subalgebra::TOEP, from_binary_tree(s), from_binary_tree(t));
          if (!(expected == actual.terms)) {
            return "Tamari interval product differs from the TOEP fiber-sum product at " +
                   describe(from_binary_tree(s)) + " x " + describe(from_binary_tree(t));
          }
        }
      }
    }
    for (const auto& t : all_binary_trees(total)) {
      // coproduct of the fiber sum, computed on permutations and regrouped by trees
      std::map<std::pair<Permutation, Permutation>, Coeff> ambient;
      for (const auto& sigma : index[total].fibers.at(t)) {
        for (const auto& split : classical::deconcatenations(sigma)) ambient[split] += 1;
      }
      TensorCombination expected;
      std::map<std::pair<BinaryTree, BinaryTree>, Coeff> grouped;
      for (const auto& [split, c] : ambient) {
        const auto key = std::make_pair(index[split.first.size()].bt.at(split.first),
                                        index[split.second.size()].bt.at(split.second));
        grouped.emplace(key, c);
      }
      std::size_t covered = 0;
      for (const auto& [key, c] : grouped) {
        for (const auto& a : index[key.first.size()].fibers.at(key.first)) {
          for (const auto& b : index[key.second.size()].fibers.at(key.second)) {
            auto it = ambient.find({a, b});
            if (it == ambient.end() || it->second != c) {
              return "permutation-level coproduct of a tree fiber does not regroup at " +
                     describe(from_binary_tree(t));
            }
            ++covered;
          }
        }
        expected.add({from_binary_tree(key.first), from_binary_tree(key.second)}, c);
      }
      if (covered != ambient.size()) return "stray coproduct terms at " + describe(from_binary_tree(t));
      if (!(expected == subalgebra_coproduct(Subalgebra::TOEP, from_binary_tree(t)).terms)) {
        return "tree coproduct differs from the TOEP fiber-sum coproduct at " + describe(from_binary_tree(t));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_chapoton_schroder(int n_max) {
  std::vector<std::map<OrderedPartition, SchroderTree>> st(static_cast<std::size_t>(n_max) + 1);
  std::vector<std::map<SchroderTree, std::vector<OrderedPartition>>> fibers(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& pi : all_ordered_partitions(n)) {
      const SchroderTree s = schroder_insert(pi);
      st[n].emplace(pi, s);
      fibers[n][s].push_back(pi);
    }
  }
  auto label_map = [&](int n) { return st[static_cast<std::size_t>(n)]; };
  for (int total = 0; total <= n_max; ++total) {
    const auto labels = label_map(total);
    for (int m = 0; m <= total; ++m) {
      for (const auto& [s1, fib1] : fibers[m]) {
        for (const auto& [s2, fib2] : fibers[total - m]) {
          std::map<OrderedPartition, Coeff> ambient;
          for (const auto& a : fib1) {
            for (const auto& b : fib2) {
              for (const auto& rho : classical::shifted_shuffle(a, b)) ambient[rho] += 1;
            }
          }
          const auto grouped = collect_fibers(ambient, labels, fibers[total]);
          if (!grouped) {
            return "ordered-partition product of Schroder fibers does not regroup at " +
                   describe(from_schroder_tree(s1)) + " x " + describe(from_schroder_tree(s2));
          }
          LinearCombination expected;
          for (const auto& [tree, c] : *grouped) expected.add(from_schroder_tree(tree), c);
          const auto actual =
              subalgebra_product(Subalgebra::TOFP, from_schroder_tree(s1), from_schroder_tree(s2));
          if (!(expected == actual.terms)) {
            return "Schroder product differs from the TOFP fiber-sum product at " +
                   describe(from_schroder_tree(s1)) + " x " + describe(from_schroder_tree(s2));
          }
        }
      }
    }
    for (const auto& [tree, fib] : fibers[total]) {
      TensorCombination expected;
      std::map<std::pair<SchroderTree, SchroderTree>, Coeff> grouped;
      std::map<std::pair<OrderedPartition, OrderedPartition>, Coeff> ambient;
      for (const auto& pi : fib) {
        for (const auto& split : classical::deconcatenations(pi)) ambient[split] += 1;
      }
      for (const auto& [split, c] : ambient) {
        grouped.emplace(std::make_pair(st[split.first.size()].at(split.first),
                                       st[split.second.size()].at(split.second)),
                        c);
      }
      for (const auto& [key, c] : grouped) {
        expected.add({from_schroder_tree(key.first), from_schroder_tree(key.second)}, c);
      }
      if (!(expected == subalgebra_coproduct(Subalgebra::TOFP, from_schroder_tree(tree)).terms)) {
        return "Schroder coproduct differs from the TOFP fiber-sum coproduct at " +
               describe(from_schroder_tree(tree));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> isomorphism_counterexample(Pairing p, int n_max) {
  if (n_max < 0 || n_max > 5) throw LimitError("isomorphism checks support n_max in 0..5");
  switch (p) {
    case Pairing::MalvenutoReutenauer: return check_mr(n_max);
    case Pairing::Chapoton: return check_chapoton(n_max);
    case Pairing::LodayRonco: return check_loday_ronco(n_max);
    case Pairing::ChapotonSchroder: return check_chapoton_schroder(n_max);
  }
  return std::string("unknown pairing");
}

bool isomorphism_check(Pairing p, int n_max) { return !isomorphism_counterexample(p, n_max).has_value(); }

std::optional<std::string> toep_permutation_closure_counterexample(int total) {
  if (total < 0 || total > 7) throw LimitError("permutation-level closure supports totals 0..7");
  std::vector<FiberIndex<Permutation>> index;
  for (int n = 0; n <= total; ++n) index.push_back(bst_index(n));
  for (int m = 0; m <= total; ++m) {
    for (const auto& [s, fib_s] : index[m].fibers) {
      for (const auto& [t, fib_t] : index[total - m].fibers) {
        std::map<Permutation, Coeff> ambient;
        for (const auto& sigma : fib_s) {
          for (const auto& tau : fib_t) {
            for (const auto& rho : classical::shifted_shuffle(sigma, tau)) ambient[rho] += 1;
          }
        }
        const auto grouped = collect_fibers(ambient, index[total].bt, index[total].fibers);
        const std::string where = describe(from_binary_tree(s)) + " x " + describe(from_binary_tree(t));
        if (!grouped) return "permutation product of tree fibers does not regroup at " + where;
        std::set<BinaryTree> expected;
        for (const auto& u : classical::tamari_product(s, t)) expected.insert(u);
        std::set<BinaryTree> got;
        for (const auto& [u, c] : *grouped) {
          if (c != 1) return "fiber coefficient other than 1 at " + where;
          got.insert(u);
        }
        if (got != expected) return "regrouped product is not the Tamari interval at " + where;
      }
    }
  }
  return std::nullopt;
}

}  // namespace intrel
