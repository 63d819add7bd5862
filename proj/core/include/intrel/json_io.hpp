#pragma once

#include <string>

#include "json.hpp"

#include "intrel/family_algebras.hpp"
#include "intrel/families.hpp"
#include "intrel/hopf.hpp"
#include "intrel/relation.hpp"
#include "intrel/trees.hpp"

// JSON forms of relations, algebra elements and the classical objects.
// Readers throw InputError on malformed input; writers always emit terms in
// canonical key order so equal values serialize to equal text.

namespace intrel::json_io {

using Json = nlohmann::json;

Json to_json(const Relation& r);
Relation relation_from_json(const Json& j);

Json to_json(const ModuleElement& a);
ModuleElement module_element_from_json(const Json& j);
Json to_json(const TensorElement& a);
TensorElement tensor_element_from_json(const Json& j);

/// Fiber-sum elements carry the subalgebra name in "family".
Json to_json(const FamilyElement& a);
FamilyElement family_element_from_json(const Json& j);
Json to_json(const FamilyTensor& a);

Json to_json(const Permutation& sigma);
Permutation permutation_from_json(const Json& j);
Json to_json(const OrderedPartition& pi);
OrderedPartition ordered_partition_from_json(const Json& j);
/// Empty tree is null, otherwise [left, right].
Json to_json(const BinaryTree& t);
BinaryTree binary_tree_from_json(const Json& j);
/// Leaf is [], otherwise the array of children.
Json to_json(const SchroderTree& s);
SchroderTree schroder_tree_from_json(const Json& j);

/// Parses text, mapping parse errors to InputError.
Json parse(const std::string& text);
/// Compact pair list such as [[1,2],[3,2]].
std::string pair_label(const Relation& r);

}  // namespace intrel::json_io
