#include "doctest.h"

#include <algorithm>
#include <set>

#include "intrel/errors.hpp"
#include "intrel/relation.hpp"
#include "oracles.hpp"

using namespace intrel;

namespace {

std::vector<oracle::Rel> sorted_oracle(std::vector<Relation> rs) {
  std::vector<oracle::Rel> out;
  for (const auto& r : rs) out.push_back(oracle::from_lib(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Rel> sorted(std::vector<oracle::Rel> rs) {
  std::sort(rs.begin(), rs.end());
  return rs;
}

}  // namespace

TEST_SUITE("relation") {

TEST_CASE("pairs are stored without the diagonal and read back in canonical order") {
  const Relation r = Relation::from_pairs(3, {{3, 2}, {1, 2}, {1, 3}});
  CHECK(r.size() == 3);
  CHECK(r.pair_count() == 3);
  CHECK(r.contains(2, 2));
  CHECK(r.contains(1, 3));
  CHECK_FALSE(r.contains(3, 1));
  CHECK(r.pairs() == std::vector<Pair>{{1, 2}, {1, 3}, {3, 2}});
  CHECK_THROWS_AS(Relation::from_pairs(2, {{1, 3}}), InputError);
}

TEST_CASE("relation counts follow 2^(n(n-1))") {
  CHECK(relation_count(0) == 1);
  CHECK(relation_count(3) == 64);
  CHECK(relation_count(5) == 1048576);
  std::set<Relation> seen;
  for_each_relation(3, [&](const Relation& r) { seen.insert(r); });
  CHECK(seen.size() == 64);
}

TEST_CASE("from_code and for_each_relation agree with the oracle enumeration") {
  std::vector<Relation> all;
  for_each_relation(3, [&](const Relation& r) { all.push_back(r); });
  CHECK(sorted_oracle(all) == sorted(oracle::all_relations(3)));
}

TEST_CASE("weak order matches the set-based definition on IRel_3") {
  const auto all = oracle::all_relations(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      REQUIRE(weak_le(oracle::to_lib(a), oracle::to_lib(b)) == oracle::weak_le(a, b));
    }
  }
}

TEST_CASE("meet and join are the greatest lower and least upper bounds on IRel_2") {
  const auto all = oracle::all_relations(2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto m = oracle::from_lib(meet(oracle::to_lib(a), oracle::to_lib(b)));
      const auto j = oracle::from_lib(join(oracle::to_lib(a), oracle::to_lib(b)));
      for (const auto& z : all) {
        CHECK((oracle::weak_le(z, a) && oracle::weak_le(z, b)) == oracle::weak_le(z, m));
        CHECK((oracle::weak_le(a, z) && oracle::weak_le(b, z)) == oracle::weak_le(j, z));
      }
    }
  }
}

TEST_CASE("restriction relabels the chosen positions") {
  const Relation r = Relation::from_pairs(4, {{1, 3}, {4, 2}, {2, 3}});
  const std::vector<int> x{2, 3, 4};
  CHECK(restriction(r, x) == Relation::from_pairs(3, {{1, 2}, {3, 1}}));
  CHECK(restriction(r, 3, 4) == Relation::from_pairs(2, {}));
  CHECK(restriction(r, 3, 2).size() == 0);
}

TEST_CASE("shifted shuffle is the set of relations with the prescribed restrictions") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n + m <= 3; ++n) {
      for (const auto& r : oracle::all_relations(m)) {
        for (const auto& s : oracle::all_relations(n)) {
          const auto got = shifted_shuffle(oracle::to_lib(r), oracle::to_lib(s));
          REQUIRE(got.size() == (std::size_t{1} << (2 * m * n)));
          REQUIRE(sorted_oracle(got) == sorted(oracle::shuffle(r, s)));
        }
      }
    }
  }
}

TEST_CASE("shuffle stops early when the visitor asks") {
  const Relation one = Relation::from_pairs(1, {});
  int seen = 0;
  for_each_shifted_shuffle(Relation::from_pairs(2, {}), one, [&](const Relation&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("under and over products bound the shuffle") {
  const Relation r = Relation::from_pairs(2, {{1, 2}});
  const Relation s = Relation::from_pairs(1, {});
  CHECK(under_product(r, s) == Relation::from_pairs(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(over_product(r, s) == Relation::from_pairs(3, {{1, 2}, {3, 1}, {3, 2}}));
}

TEST_CASE("total cuts agree with the subset oracle") {
  for (const auto& t : oracle::all_relations(3)) {
    std::set<std::vector<int>> expected;
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<int> xs;
      for (int v = 1; v <= 3; ++v) {
        if ((mask >> (v - 1)) & 1U) xs.push_back(v);
      }
      if (oracle::is_total_cut(t, xs)) expected.insert(xs);
    }
    std::set<std::vector<int>> got;
    for (const auto& cut : total_cuts(oracle::to_lib(t))) got.insert(cut.x);
    REQUIRE(got == expected);
  }
}

TEST_CASE("convolution has binomially many members, each cut as requested") {
  const Relation r = Relation::from_pairs(2, {{2, 1}});
  const Relation s = Relation::from_pairs(2, {{1, 2}});
  const auto conv = convolution(r, s);
  CHECK(conv.size() == 6);
  CHECK(std::set<Relation>(conv.begin(), conv.end()).size() == 6);
  for (const auto& t : conv) {
    bool found = false;
    for (const auto& cut : total_cuts(t)) {
      if (cut.x.size() == 2 && restriction(t, cut.x) == r && restriction(t, cut.y) == s) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("primitive and reverse cuts") {
  const Relation t = Relation::from_pairs(3, {{1, 2}, {1, 3}, {3, 2}});
  CHECK(primitive_cuts(t) == std::vector<int>{0, 1, 3});
  CHECK(has_primitive_cut(t, 1));
  CHECK_FALSE(has_primitive_cut(t, 2));
  CHECK_FALSE(is_under_indecomposable(t));
  const Relation d = Relation::from_pairs(2, {{2, 1}});
  CHECK(has_reverse_cut(d, 1));
  CHECK(is_under_indecomposable(d));
  CHECK_FALSE(is_over_indecomposable(d));
  CHECK_THROWS_AS(is_under_indecomposable(Relation()), InputError);
}

TEST_CASE("indecomposability agrees with the oracle on IRel_3") {
  for (const auto& t : oracle::all_relations(3)) {
    REQUIRE(is_under_indecomposable(oracle::to_lib(t)) == oracle::is_indecomposable(t));
  }
}

TEST_CASE("poset recognition and transitive closure") {
  for (const auto& t : oracle::all_relations(3)) {
    REQUIRE(is_poset(oracle::to_lib(t)) == oracle::is_poset(t));
  }
  const Relation chain = Relation::from_pairs(3, {{1, 2}, {2, 3}});
  CHECK(transitive_closure(chain) == Relation::from_pairs(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(is_transitive(transitive_closure(chain)));
  CHECK_FALSE(is_antisymmetric(Relation::from_pairs(2, {{1, 2}, {2, 1}})));
}

TEST_CASE("weak rank grows along covers") {
  CHECK(weak_rank(Relation::from_pairs(2, {{1, 2}})) == 0);
  CHECK(weak_rank(Relation::from_pairs(2, {})) == 1);
  CHECK(weak_rank(Relation::from_pairs(2, {{2, 1}})) == 2);
}

}  // TEST_SUITE
