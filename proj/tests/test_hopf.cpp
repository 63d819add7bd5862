#include "doctest.h"

#include <map>

#include "intrel/errors.hpp"
#include "intrel/hopf.hpp"
#include "oracles.hpp"

using namespace intrel;

namespace {

Relation rel(int n, std::initializer_list<Pair> pairs) { return Relation::from_pairs(n, pairs); }

const Relation kUnit(0);
const Relation kOne = Relation::from_pairs(1, {});

// Product of two combinations through the oracle shuffle, for cross-checking.
LinearCombination oracle_product(const LinearCombination& a, const LinearCombination& b, bool posets_only) {
  LinearCombination out;
  for (const auto& [r, cr] : a) {
    for (const auto& [s, cs] : b) {
      for (const auto& t : oracle::shuffle(oracle::from_lib(r), oracle::from_lib(s))) {
        if (posets_only && !oracle::is_poset(t)) continue;
        out.add(oracle::to_lib(t), cr * cs);
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("F_12 . F_1 spans the 16-relation interval, 6 of them posets") {
  const Relation r = rel(2, {{1, 2}});
  const auto irel = shuffle_product(r, kOne, Carrier::IRel);
  CHECK(irel.size() == 16);
  for (const auto& [t, c] : irel) {
    CHECK(c == 1);
    CHECK(weak_le(rel(3, {{1, 2}, {1, 3}, {2, 3}}), t));
    CHECK(weak_le(t, rel(3, {{1, 2}, {3, 1}, {3, 2}})));
  }
  const auto ipos = shuffle_product(r, kOne, Carrier::IPos);
  CHECK(ipos.size() == 6);
  LinearCombination expected;
  for (const auto& t : {rel(3, {{1, 2}, {1, 3}, {2, 3}}), rel(3, {{1, 2}, {1, 3}}), rel(3, {{1, 2}, {1, 3}, {3, 2}}),
                        rel(3, {{1, 2}}), rel(3, {{1, 2}, {3, 2}}), rel(3, {{1, 2}, {3, 1}, {3, 2}})}) {
    expected.add(t, 1);
  }
  CHECK(ipos == expected);
}

TEST_CASE("coproduct of the chain 1 3 2 deconcatenates") {
  const Relation t = rel(3, {{1, 3}, {1, 2}, {3, 2}});
  TensorCombination expected;
  expected.add({t, kUnit}, 1);
  expected.add({kOne, rel(2, {{2, 1}})}, 1);
  expected.add({rel(2, {{1, 2}}), kOne}, 1);
  expected.add({kUnit, t}, 1);
  CHECK(cut_coproduct(t) == expected);
}

TEST_CASE("compatibility on F_1 . F_1 produces the coefficient 2") {
  const auto product = shuffle_product(kOne, kOne, Carrier::IRel);
  TensorCombination lhs;
  for (const auto& [t, c] : product) {
    for (const auto& [key, k] : cut_coproduct(t)) lhs.add(key, c * k);
  }
  CHECK(lhs.coeff({kOne, kOne}) == 2);
  CHECK(lhs.size() == 9);
  CHECK(hopf_compatible(kOne, kOne));
}

TEST_CASE("products agree with the oracle shuffle in both carriers") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; m + n <= 3; ++n) {
      for (const auto& r : oracle::all_relations(m)) {
        for (const auto& s : oracle::all_relations(n)) {
          LinearCombination a;
          a.add(oracle::to_lib(r), 1);
          LinearCombination b;
          b.add(oracle::to_lib(s), 1);
          REQUIRE(shuffle_product(oracle::to_lib(r), oracle::to_lib(s), Carrier::IRel) == oracle_product(a, b, false));
          if (oracle::is_poset(r) && oracle::is_poset(s)) {
            REQUIRE(shuffle_product(oracle::to_lib(r), oracle::to_lib(s), Carrier::IPos) ==
                    oracle_product(a, b, true));
          }
        }
      }
    }
  }
}

TEST_CASE("coproduct agrees with the oracle on IRel_3") {
  for (const auto& t : oracle::all_relations(3)) {
    std::multiset<std::pair<oracle::Rel, oracle::Rel>> got;
    for (const auto& [key, c] : cut_coproduct(oracle::to_lib(t))) {
      for (Coeff i = 0; i < c; ++i) got.insert({oracle::from_lib(key.first), oracle::from_lib(key.second)});
    }
    REQUIRE(got == oracle::coproduct(t));
  }
}

TEST_CASE("module elements enforce their carrier") {
  ModuleElement a = ModuleElement::single(rel(2, {{1, 2}, {2, 1}}), Basis::F, Carrier::IPos);
  CHECK_THROWS_AS(validate(a), InputError);
  CHECK_THROWS_AS(hopf_compatible(rel(2, {{1, 2}, {2, 1}}), kOne, Carrier::IPos), InputError);
  const auto x = ModuleElement::single(kOne);
  const auto y = ModuleElement::single(kOne, Basis::E);
  CHECK_THROWS_AS(f_product(x, y), InputError);
}

TEST_CASE("E and H expansions are the weak-order up and down sets") {
  const Relation empty2 = rel(2, {});
  LinearCombination e;
  e.add(empty2, 1);
  e.add(rel(2, {{2, 1}}), 1);
  CHECK(e_from(empty2).terms == e);
  LinearCombination h;
  h.add(empty2, 1);
  h.add(rel(2, {{1, 2}}), 1);
  CHECK(h_from(empty2).terms == h);

  for (const auto& r : oracle::all_relations(3)) {
    LinearCombination up;
    for (const auto& t : oracle::all_relations(3)) {
      if (oracle::weak_le(r, t)) up.add(oracle::to_lib(t), 1);
    }
    REQUIRE(e_from(oracle::to_lib(r)).terms == up);
  }
}

TEST_CASE("E^{empty_2} . E^{1} = E^{13,23}") {
  const auto product = f_product(e_from(rel(2, {})), e_from(kOne));
  CHECK(product.terms == e_from(rel(3, {{1, 3}, {2, 3}})).terms);
  CHECK(to_basis(product, Basis::E) == ModuleElement::single(rel(3, {{1, 3}, {2, 3}}), Basis::E));
  CHECK(e_product_check(rel(2, {}), kOne));
  CHECK(h_product_check(rel(2, {}), kOne));
}

TEST_CASE("basis changes round-trip") {
  ModuleElement a;
  a.terms.add(rel(2, {{1, 2}}), 3);
  a.terms.add(rel(2, {{2, 1}}), -2);
  CHECK(to_basis(to_basis(a, Basis::E), Basis::F) == a);
  CHECK(to_basis(to_basis(a, Basis::H), Basis::F) == a);
  CHECK(to_basis(to_basis(a, Basis::H), Basis::E) == to_basis(a, Basis::E));
}

TEST_CASE("bar coproduct follows primitive cuts") {
  const Relation t = rel(3, {{1, 2}, {1, 3}, {3, 2}});
  const auto full = bar_coproduct_e(t);
  CHECK(full.terms.size() == 3);
  const auto reduced = bar_coproduct_e(t, true);
  TensorCombination expected;
  expected.add({kOne, rel(2, {{2, 1}})}, 1);
  CHECK(reduced.terms == expected);
  CHECK(bar_coproduct_e(rel(2, {{2, 1}}), true).terms.empty());
}

TEST_CASE("unital infinitesimal relation on small pairs") {
  CHECK(unital_infinitesimal_check(kOne, kOne));
  CHECK(unital_infinitesimal_check(rel(2, {{1, 2}}), kOne));
  CHECK(unital_infinitesimal_check(kOne, rel(2, {{2, 1}})));
  CHECK_THROWS_AS(unital_infinitesimal_check(kUnit, kOne), InputError);
}

TEST_CASE("indecomposable counts and the series identity") {
  const std::int64_t expected[] = {1, 3, 57, 3963};
  for (int n = 1; n <= 4; ++n) {
    std::int64_t naive = 0;
    for (const auto& t : oracle::all_relations(n)) naive += oracle::is_indecomposable(t) ? 1 : 0;
    CHECK(naive == expected[n - 1]);
    CHECK(count_indecomposables(n) == naive);
    CHECK(inclusion_exclusion_in(n) == naive);
  }
  CHECK(relation_total(4) == 4096);
}

TEST_CASE("checked coefficients refuse to overflow") {
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 62, 4), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  LinearCombination a;
  a.add(kOne, 5);
  a.add(kOne, -5);
  CHECK(a.empty());
}

TEST_CASE("iterated coproducts agree") {
  for (const auto& t : oracle::all_relations(3)) {
    const Relation r = oracle::to_lib(t);
    REQUIRE(left_iterated_coproduct(r) == right_iterated_coproduct(r));
  }
}

}  // TEST_SUITE
