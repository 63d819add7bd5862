#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "intrel/combination.hpp"
#include "intrel/families.hpp"
#include "intrel/hopf.hpp"
#include "intrel/projections.hpp"

namespace intrel {

enum class Style { Quotient, FiberSum };

/// Hopf subalgebras of K IPos (or of a quotient) spanned by sums over the
/// fibers of a projection.
enum class Subalgebra { WOIP, IWOIP, DWOIP, WOEPid, WOEPdd, TOEP, TOIP, TOFP };

inline constexpr Subalgebra kAllSubalgebras[] = {
    Subalgebra::WOIP,   Subalgebra::IWOIP, Subalgebra::DWOIP, Subalgebra::WOEPid,
    Subalgebra::WOEPdd, Subalgebra::TOEP,  Subalgebra::TOIP,  Subalgebra::TOFP};

std::string_view to_string(Style s);
Style parse_style(std::string_view text);
std::string_view to_string(Subalgebra s);
Subalgebra parse_subalgebra(std::string_view text);

/// Family of the basis labels.
Family key_family(Subalgebra s);
/// Family whose quotient algebra hosts the fiber sums.
Family ambient_family(Subalgebra s);
ProjectionMap projection_of(Subalgebra s);

/// An element of a quotient algebra (keys are members of `family`) or of a
/// fiber-sum subalgebra (keys label fiber sums; `subalgebra` says which).
struct FamilyElement {
  Style style = Style::Quotient;
  Family family = Family::IPos;
  Subalgebra subalgebra = Subalgebra::WOIP;
  LinearCombination terms;

  static FamilyElement quotient(Family f, const Relation& r, Coeff c = 1);
  static FamilyElement fiber_sum(Subalgebra s, const Relation& r, Coeff c = 1);

  friend bool operator==(const FamilyElement&, const FamilyElement&) = default;
};

struct FamilyTensor {
  Style style = Style::Quotient;
  Family family = Family::IPos;
  Subalgebra subalgebra = Subalgebra::WOIP;
  TensorCombination terms;

  friend bool operator==(const FamilyTensor&, const FamilyTensor&) = default;
};

/// Throws InputError when a key is outside the element's family.
void validate(const FamilyElement& a);

/// Families whose non-members span a Hopf ideal of K IPos (plus IRel itself).
bool supports_quotient(Family f);
/// The relation {(1,2),(1,3),(3,2)}: it lies in the convolution of a size-1
/// poset with {(2,1)} but belongs to none of TOEP, TOIP, TOFP.
Relation tamari_quotient_counterexample();
std::string tamari_quotient_refusal(Family f);

/// Product of two basis elements in the quotient by the non-members of f.
/// Memoized per (family, r, s).
LinearCombination quotient_basis_product(Family f, const Relation& r, const Relation& s);
FamilyElement quotient_product(const FamilyElement& a, const FamilyElement& b);
FamilyTensor quotient_coproduct(const FamilyElement& a);

/// The fiber sum labelled by `target`, expanded in the ambient F basis.
ModuleElement fiber_sum_element(Subalgebra s, const Relation& target);
LinearCombination expand_fiber_sums(Subalgebra s, const LinearCombination& labels);
/// Rewrites an ambient combination in the fiber-sum basis. Throws
/// ClosureViolation when it is not a combination of whole fibers.
FamilyElement recollect(Subalgebra s, const LinearCombination& ambient);

/// Multiplies the expansions in the ambient algebra and recollects.
FamilyElement subalgebra_product(Subalgebra s, const Relation& t1, const Relation& t2);
FamilyElement subalgebra_product(const FamilyElement& a, const FamilyElement& b);
/// Sum of the labels in the shifted shuffle of t1 and t2 that lie in the key family.
LinearCombination subalgebra_product_formula(Subalgebra s, const Relation& t1, const Relation& t2);

/// Ambient coproduct of the expansion of t, rewritten as a tensor of fiber
/// sums. Throws ClosureViolation when some tensor factor is not made of whole
/// fibers.
FamilyTensor subalgebra_coproduct(Subalgebra s, const Relation& t);
/// Sum over total cuts (X, Y) of t of the pairs (t_X, t_Y). Matches
/// subalgebra_coproduct for the weak-order families only: in the Tamari
/// families a cut of a linear extension need not be a cut of t.
TensorCombination subalgebra_coproduct_formula(Subalgebra s, const Relation& t);
FamilyTensor subalgebra_coproduct(const FamilyElement& a);

enum class Pairing { MalvenutoReutenauer, Chapoton, LodayRonco, ChapotonSchroder };

std::string_view to_string(Pairing p);
/// Compares the classical rules against the family algebras for all inputs
/// of total size at most n_max. Returns a description of the first mismatch.
std::optional<std::string> isomorphism_counterexample(Pairing p, int n_max);
bool isomorphism_check(Pairing p, int n_max);

/// Closure of the binary-tree fiber sums inside the permutation algebra, for
/// every pair of trees with the given total size, computed on permutations.
std::optional<std::string> toep_permutation_closure_counterexample(int total);

}  // namespace intrel
