#include "doctest.h"

#include <map>
#include <set>

#include "intrel/errors.hpp"
#include "intrel/families.hpp"
#include "intrel/trees.hpp"
#include "oracles.hpp"

using namespace intrel;

TEST_SUITE("trees") {

TEST_CASE("binary trees are counted by the Catalan numbers") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) CHECK(all_binary_trees(n).size() == catalan[n]);
}

TEST_CASE("tree posets match the oracle and invert") {
  for (int n = 0; n <= 5; ++n) {
    std::set<oracle::Rel> images;
    for (const auto& t : all_binary_trees(n)) {
      const Relation p = from_binary_tree(t);
      images.insert(oracle::from_lib(p));
      REQUIRE(to_binary_tree(p) == t);
    }
    CHECK(images == oracle::toep(n));
  }
  CHECK_THROWS_AS(to_binary_tree(Relation::from_pairs(2, {})), InputError);
}

TEST_CASE("combs and subtrees") {
  const auto low = BinaryTree::left_comb(3);
  const auto high = BinaryTree::right_comb(3);
  CHECK(from_binary_tree(low) == Relation::from_pairs(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(from_binary_tree(high) == Relation::from_pairs(3, {{2, 1}, {3, 1}, {3, 2}}));
  CHECK(low.left_subtree() == BinaryTree::left_comb(2));
  CHECK(low.right_subtree().empty());
  const auto t = BinaryTree::node(BinaryTree::left_comb(1), BinaryTree::left_comb(1));
  CHECK(t.size() == 3);
  CHECK(t.root() == 2);
  CHECK(from_binary_tree(t) == Relation::from_pairs(3, {{1, 2}, {3, 2}}));
}

TEST_CASE("Tamari order agrees with the rotation closure") {
  for (int n = 0; n <= 5; ++n) {
    std::map<oracle::Rel, std::string> shape_of;
    for (const auto& t : oracle::trees(n)) shape_of[oracle::tree_poset(t)] = oracle::shape(t);
    const auto up = oracle::tamari_up_sets(n);
    const auto all = all_binary_trees(n);
    for (const auto& a : all) {
      const auto sa = shape_of.at(oracle::from_lib(from_binary_tree(a)));
      for (const auto& b : all) {
        const auto sb = shape_of.at(oracle::from_lib(from_binary_tree(b)));
        REQUIRE(tamari_le(a, b) == (up.at(sa).count(sb) > 0));
      }
      REQUIRE(tamari_up_set(a).size() == up.at(sa).size());
      if (n > 0) REQUIRE(tamari_le(BinaryTree::left_comb(n), a));
      if (n > 0) REQUIRE(tamari_le(a, BinaryTree::right_comb(n)));
    }
  }
  CHECK_THROWS_AS(tamari_le(BinaryTree::left_comb(2), BinaryTree::left_comb(3)), InputError);
}

TEST_CASE("right rotations are the Tamari covers") {
  const std::size_t edges[] = {0, 0, 1, 5, 21, 84};
  for (int n = 0; n <= 5; ++n) {
    std::size_t total = 0;
    for (const auto& t : all_binary_trees(n)) {
      for (const auto& u : t.right_rotations()) {
        CHECK(tamari_le(t, u));
        CHECK(t != u);
        ++total;
      }
    }
    CHECK(total == edges[n]);
    CHECK(tamari_covers(n).size() == edges[n]);
  }
}

TEST_CASE("Tamari intervals give the intersection of their tree posets") {
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Rel> images;
    const auto all = all_binary_trees(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (!tamari_le(a, b)) continue;
        std::vector<oracle::Rel> posets;
        for (const auto& c : all) {
          if (tamari_le(a, c) && tamari_le(c, b)) posets.push_back(oracle::from_lib(from_binary_tree(c)));
        }
        const auto interval = oracle::from_lib(from_tree_interval(a, b));
        REQUIRE(interval == oracle::intersect(posets));
        images.insert(interval);
      }
    }
    CHECK(images == oracle::toip(n));
  }
  CHECK_THROWS_AS(from_tree_interval(BinaryTree::right_comb(2), BinaryTree::left_comb(2)), InputError);
}

TEST_CASE("Schroder trees") {
  const std::size_t schroder[] = {1, 1, 3, 11, 45, 197};
  for (int n = 0; n <= 5; ++n) {
    const auto all = all_schroder_trees(n);
    CHECK(all.size() == schroder[n]);
    std::set<oracle::Rel> images;
    for (const auto& s : all) {
      CHECK(s.size() == n);
      images.insert(oracle::from_lib(from_schroder_tree(s)));
    }
    CHECK(images.size() == all.size());
    CHECK(images == oracle::tofp(n));
  }
  CHECK_THROWS_AS(SchroderTree(std::vector<SchroderTree>{SchroderTree()}), InputError);
  const SchroderTree leaf;
  const SchroderTree corolla({leaf, leaf, leaf});
  CHECK(corolla.size() == 2);
  CHECK(from_schroder_tree(corolla) == Relation::from_pairs(2, {}));
}

TEST_CASE("binary trees embed in Schroder trees") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& t : all_binary_trees(n)) {
      REQUIRE(from_schroder_tree(to_schroder_tree(t)) == from_binary_tree(t));
    }
  }
}

}  // TEST_SUITE
