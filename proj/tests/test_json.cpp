#include "doctest.h"

#include "intrel/errors.hpp"
#include "intrel/json_io.hpp"

using namespace intrel;
using json_io::Json;

TEST_SUITE("json") {

TEST_CASE("relations round-trip and reject bad input") {
  const Relation r = Relation::from_pairs(3, {{1, 2}, {3, 2}});
  const Json j = json_io::to_json(r);
  CHECK(j.dump() == R"({"n":3,"pairs":[[1,2],[3,2]]})");
  CHECK(json_io::relation_from_json(j) == r);
  CHECK(json_io::pair_label(r) == "[[1,2],[3,2]]");
  CHECK_THROWS_AS(json_io::relation_from_json(json_io::parse(R"({"n":2,"pairs":[[1,3]]})")), InputError);
  CHECK_THROWS_AS(json_io::relation_from_json(json_io::parse(R"({"pairs":[]})")), InputError);
  CHECK_THROWS_AS(json_io::relation_from_json(json_io::parse(R"({"n":17,"pairs":[]})")), InputError);
  CHECK_THROWS_AS(json_io::parse("{not json"), InputError);
}

TEST_CASE("module and tensor elements round-trip") {
  ModuleElement a = ModuleElement::single(Relation::from_pairs(2, {{1, 2}}), Basis::E, Carrier::IPos, 3);
  a.terms.add(Relation::from_pairs(2, {}), -1);
  CHECK(json_io::module_element_from_json(json_io::to_json(a)) == a);

  TensorElement t{Basis::H, Carrier::IRel, {}};
  t.terms.add({Relation::from_pairs(1, {}), Relation(0)}, 2);
  CHECK(json_io::tensor_element_from_json(json_io::to_json(t)) == t);
}

TEST_CASE("family elements carry their style") {
  const auto q = FamilyElement::quotient(Family::WOFP, Relation::from_pairs(2, {}), 4);
  CHECK(json_io::family_element_from_json(json_io::to_json(q)) == q);
  const auto f = FamilyElement::fiber_sum(Subalgebra::TOEP, Relation::from_pairs(2, {{1, 2}}));
  const Json j = json_io::to_json(f);
  CHECK(j.at("family") == "TOEP");
  CHECK(j.at("style") == "fiber-sum");
  CHECK(json_io::family_element_from_json(j) == f);
}

TEST_CASE("combinatorial objects round-trip") {
  const Permutation sigma({2, 3, 1});
  CHECK(json_io::permutation_from_json(json_io::to_json(sigma)) == sigma);
  const OrderedPartition pi({{2}, {1, 3}});
  CHECK(json_io::ordered_partition_from_json(json_io::to_json(pi)) == pi);
  for (const auto& t : all_binary_trees(4)) CHECK(json_io::binary_tree_from_json(json_io::to_json(t)) == t);
  for (const auto& s : all_schroder_trees(3)) CHECK(json_io::schroder_tree_from_json(json_io::to_json(s)) == s);
  CHECK(json_io::to_json(BinaryTree()).is_null());
  CHECK_THROWS_AS(json_io::schroder_tree_from_json(json_io::parse("[[]]")), InputError);
  CHECK_THROWS_AS(json_io::permutation_from_json(json_io::parse("[1,1]")), InputError);
}

}  // TEST_SUITE
