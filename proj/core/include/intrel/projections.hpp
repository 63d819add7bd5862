#pragma once

#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "intrel/families.hpp"
#include "intrel/relation.hpp"
#include "intrel/trees.hpp"

namespace intrel {

/// Removes (a,c), a < c, whenever c is reachable from a through increasing
/// steps x < y with x not below y.
Relation iwoip_increasing_deletion(const Relation& p);
/// Removes (c,a), a < c, whenever c is reachable from a through increasing
/// steps x < y with y not below x.
Relation dwoip_decreasing_deletion(const Relation& p);
Relation woip_deletion(const Relation& p);
/// Removes (a,c) when some a < b < c has b not below c, and (c,a) when some
/// a < b < c has b not below a.
Relation toip_deletion(const Relation& p);
Relation woep_id(const Relation& p);
Relation woep_dd(const Relation& p);

enum class ProjectionMap { IWOIPid, DWOIPdd, WOIPd, TOIPd, WOEPid, WOEPdd };

std::string_view to_string(ProjectionMap m);
ProjectionMap parse_projection_map(std::string_view text);
Relation apply_projection(ProjectionMap m, const Relation& p);
/// The family every image of the map belongs to.
Family image_family(ProjectionMap m);

/// Inserts the entries of sigma from right to left into a binary search tree.
BinaryTree bst_insert(const Permutation& sigma);
/// On each interval of values, the last block of pi meeting it supplies the
/// root angles; the gaps between them recurse.
SchroderTree schroder_insert(const OrderedPartition& pi);

bool projection_compatibility(const Permutation& sigma);
bool projection_compatibility(const Permutation& lower, const Permutation& upper);
bool projection_compatibility(const OrderedPartition& pi);

/// Image point -> sorted list of the domain members mapping onto it.
using FiberTable = std::map<Relation, std::vector<Relation>>;

/// Fibers of `m` over the size-n members of `domain`, computed by scanning the
/// domain once and cached for the life of the process.
std::shared_ptr<const FiberTable> fiber_table(ProjectionMap m, Family domain, int n);

std::vector<Relation> fiber(ProjectionMap m, const Relation& target, Family domain);

}  // namespace intrel
