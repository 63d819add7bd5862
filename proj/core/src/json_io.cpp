#include "intrel/json_io.hpp"

#include <string>

#include "intrel/errors.hpp"

namespace intrel::json_io {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Coeff as_coeff(const Json& j) {
  if (!j.is_number_integer()) throw InputError("coeff must be an integer");
  return j.get<Coeff>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

Json terms_to_json(const LinearCombination& terms) {
  Json out = Json::array();
  for (const auto& [r, c] : terms) out.push_back({{"rel", to_json(r)}, {"coeff", c}});
  return out;
}

LinearCombination terms_from_json(const Json& j) {
  LinearCombination out;
  for (const auto& t : as_array(j, "terms")) out.add(relation_from_json(field(t, "rel")), as_coeff(field(t, "coeff")));
  return out;
}

Json tensor_terms_to_json(const TensorCombination& terms) {
  Json out = Json::array();
  for (const auto& [key, c] : terms) {
    out.push_back({{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", c}});
  }
  return out;
}

TensorCombination tensor_terms_from_json(const Json& j) {
  TensorCombination out;
  for (const auto& t : as_array(j, "terms")) {
    out.add({relation_from_json(field(t, "left")), relation_from_json(field(t, "right"))},
            as_coeff(field(t, "coeff")));
  }
  return out;
}

}  // namespace

Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& [u, v] : r.pairs()) pairs.push_back({u, v});
  return {{"n", r.size()}, {"pairs", pairs}};
}

Relation relation_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0 || n > kMaxSize) throw InputError("n must lie in 0.." + std::to_string(kMaxSize));
  std::vector<Pair> pairs;
  for (const auto& p : as_array(field(j, "pairs"), "pairs")) {
    if (!p.is_array() || p.size() != 2) throw InputError("each pair must be [u, v]");
    const int u = as_int(p[0], "pair entry");
    const int v = as_int(p[1], "pair entry");
    if (u < 1 || u > n || v < 1 || v > n) throw InputError("pair entry out of range 1..n");
    if (u == v) continue;
    pairs.emplace_back(u, v);
  }
  return Relation::from_pairs(n, pairs);
}

Json to_json(const ModuleElement& a) {
  return {{"basis", std::string(to_string(a.basis))},
          {"carrier", std::string(to_string(a.carrier))},
          {"terms", terms_to_json(a.terms)}};
}

ModuleElement module_element_from_json(const Json& j) {
  ModuleElement a;
  a.basis = parse_basis(as_string(field(j, "basis"), "basis"));
  a.carrier = parse_carrier(as_string(field(j, "carrier"), "carrier"));
  a.terms = terms_from_json(field(j, "terms"));
  validate(a);
  return a;
}

Json to_json(const TensorElement& a) {
  return {{"basis", std::string(to_string(a.basis))},
          {"carrier", std::string(to_string(a.carrier))},
          {"terms", tensor_terms_to_json(a.terms)}};
}

TensorElement tensor_element_from_json(const Json& j) {
  TensorElement a;
  a.basis = parse_basis(as_string(field(j, "basis"), "basis"));
  a.carrier = parse_carrier(as_string(field(j, "carrier"), "carrier"));
  a.terms = tensor_terms_from_json(field(j, "terms"));
  validate(a);
  return a;
}

Json to_json(const FamilyElement& a) {
  const std::string name =
      a.style == Style::FiberSum ? std::string(to_string(a.subalgebra)) : std::string(to_string(a.family));
  return {{"family", name}, {"style", std::string(to_string(a.style))}, {"terms", terms_to_json(a.terms)}};
}

FamilyElement family_element_from_json(const Json& j) {
  FamilyElement a;
  a.style = parse_style(as_string(field(j, "style"), "style"));
  const std::string name = as_string(field(j, "family"), "family");
  if (a.style == Style::FiberSum) {
    a.subalgebra = parse_subalgebra(name);
    a.family = key_family(a.subalgebra);
  } else {
    a.family = parse_family(name);
  }
  a.terms = terms_from_json(field(j, "terms"));
  validate(a);
  return a;
}

Json to_json(const FamilyTensor& a) {
  const std::string name =
      a.style == Style::FiberSum ? std::string(to_string(a.subalgebra)) : std::string(to_string(a.family));
  return {{"family", name},
          {"style", std::string(to_string(a.style))},
          {"terms", tensor_terms_to_json(a.terms)}};
}

Json to_json(const Permutation& sigma) { return sigma.word(); }

Permutation permutation_from_json(const Json& j) {
  std::vector<int> word;
  for (const auto& v : as_array(j, "permutation")) word.push_back(as_int(v, "permutation entry"));
  return Permutation(std::move(word));
}

Json to_json(const OrderedPartition& pi) { return pi.blocks(); }

OrderedPartition ordered_partition_from_json(const Json& j) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : as_array(j, "ordered partition")) {
    std::vector<int> block;
    for (const auto& v : as_array(b, "block")) block.push_back(as_int(v, "block entry"));
    blocks.push_back(std::move(block));
  }
  return OrderedPartition(std::move(blocks));
}

Json to_json(const BinaryTree& t) {
  if (t.empty()) return nullptr;
  return Json::array({to_json(t.left_subtree()), to_json(t.right_subtree())});
}

BinaryTree binary_tree_from_json(const Json& j) {
  if (j.is_null()) return BinaryTree();
  if (!j.is_array() || j.size() != 2) throw InputError("binary tree node must be [left, right] or null");
  return BinaryTree::node(binary_tree_from_json(j[0]), binary_tree_from_json(j[1]));
}

Json to_json(const SchroderTree& s) {
  Json out = Json::array();
  for (const auto& child : s.children()) out.push_back(to_json(child));
  return out;
}

SchroderTree schroder_tree_from_json(const Json& j) {
  const Json& arr = as_array(j, "Schroder tree node");
  if (arr.empty()) return SchroderTree();
  if (arr.size() < 2) throw InputError("Schroder tree node needs at least two children");
  std::vector<SchroderTree> children;
  for (const auto& c : arr) children.push_back(schroder_tree_from_json(c));
  return SchroderTree(std::move(children));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string pair_label(const Relation& r) { return to_json(r).at("pairs").dump(); }

}  // namespace intrel::json_io
