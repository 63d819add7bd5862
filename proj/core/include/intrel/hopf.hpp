#pragma once

#include <cstdint>
#include <string_view>

#include "intrel/combination.hpp"
#include "intrel/relation.hpp"

namespace intrel {

enum class Basis { F, E, H };
enum class Carrier { IRel, IPos };

std::string_view to_string(Basis b);
std::string_view to_string(Carrier c);
Basis parse_basis(std::string_view text);
Carrier parse_carrier(std::string_view text);

struct ModuleElement {
  Basis basis = Basis::F;
  Carrier carrier = Carrier::IRel;
  LinearCombination terms;

  static ModuleElement single(const Relation& r, Basis basis = Basis::F,
                              Carrier carrier = Carrier::IRel, Coeff c = 1);

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

struct TensorElement {
  Basis basis = Basis::F;
  Carrier carrier = Carrier::IRel;
  TensorCombination terms;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// Throws InputError if any key breaks the carrier (non-poset under IPos).
void validate(const ModuleElement& a);
void validate(const TensorElement& a);

// Product and coproduct in the F basis.

/// F_r . F_s as a combination: the shifted shuffle, trimmed to posets under IPos.
LinearCombination shuffle_product(const Relation& r, const Relation& s, Carrier carrier);
ModuleElement f_product(const ModuleElement& a, const ModuleElement& b);

/// Delta F_t as a combination over total cuts.
TensorCombination cut_coproduct(const Relation& t);
TensorElement f_coproduct(const ModuleElement& a);

TensorElement tensor_product(const TensorElement& p, const TensorElement& q);

/// (Delta x id) Delta F_t and (id x Delta) Delta F_t, as triple-keyed sums.
using TripleKey = std::pair<Relation, RelationPair>;
Combination<TripleKey> left_iterated_coproduct(const Relation& t);
Combination<TripleKey> right_iterated_coproduct(const Relation& t);

bool hopf_compatible(const Relation& r, const Relation& s, Carrier carrier = Carrier::IRel);

// Multiplicative bases.

/// E^r expanded in F: the weak-order up-set of r (down-set for H).
ModuleElement e_from(const Relation& r, Carrier carrier = Carrier::IRel);
ModuleElement h_from(const Relation& r, Carrier carrier = Carrier::IRel);

/// Rewrites an element in another basis. Expansion into F is direct; the way
/// back peels off minimal (for E) or maximal (for H) terms in weak rank order.
ModuleElement to_basis(const ModuleElement& a, Basis target);

bool e_product_check(const Relation& r, const Relation& s, Carrier carrier = Carrier::IRel);
bool h_product_check(const Relation& r, const Relation& s, Carrier carrier = Carrier::IRel);

/// The primitive-cut coproduct of E^t, keys in the E basis.
TensorElement bar_coproduct_e(const Relation& t, bool reduced = false);
/// Linear extension of bar_coproduct_e to an element given in the E basis.
TensorElement bar_coproduct(const ModuleElement& a, bool reduced = false);

/// Expands an E- or H-basis tensor into F (x) F.
TensorElement tensor_to_f(const TensorElement& p);

/// Checks reduced bar-coproduct(E^r E^s) against
/// (E^r (x) 1) bar(E^s) + bar(E^r) (1 (x) E^s) + E^r (x) E^s, all in F (x) F.
bool unital_infinitesimal_check(const Relation& r, const Relation& s);

// Indecomposables.

/// 2^(n(n-1)).
std::int64_t relation_total(int n);
/// Enumerates the relations on [n] and counts those without a nontrivial primitive cut.
std::int64_t count_indecomposables(int n);
/// Signed sum over compositions of n of products of relation_total.
std::int64_t inclusion_exclusion_in(int n);

}  // namespace intrel
