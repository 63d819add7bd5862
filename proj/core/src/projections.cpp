#include "intrel/projections.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace intrel {
namespace {

void require_poset(const Relation& p, const char* what) {
  if (!is_poset(p)) throw InputError(std::string(what) + ": input is not a poset");
}

inline bool lt(const Relation& p, int u, int v) { return u != v && p.contains(u, v); }

// reach[a] holds every y > a joined to a by a chain of allowed steps.
template <class Step>
std::vector<RowMask> chain_reach(int n, Step allowed) {
  std::vector<RowMask> reach(static_cast<std::size_t>(n) + 1, 0);
  for (int a = n; a >= 1; --a) {
    RowMask mask = 0;
    for (int y = a + 1; y <= n; ++y) {
      if (allowed(a, y)) mask |= bits::column(y) | reach[static_cast<std::size_t>(y)];
    }
    reach[static_cast<std::size_t>(a)] = mask;
  }
  return reach;
}

}  // namespace

Relation iwoip_increasing_deletion(const Relation& p) {
  require_poset(p, "iwoip_increasing_deletion");
  const int n = p.size();
  const auto reach = chain_reach(n, [&](int x, int y) { return !lt(p, x, y); });
  Relation out = p;
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 1; c <= n; ++c) {
      if (lt(p, a, c) && (reach[static_cast<std::size_t>(a)] & bits::column(c))) out.erase(a, c);
    }
  }
  return out;
}

Relation dwoip_decreasing_deletion(const Relation& p) {
  require_poset(p, "dwoip_decreasing_deletion");
  const int n = p.size();
  const auto reach = chain_reach(n, [&](int x, int y) { return !lt(p, y, x); });
  Relation out = p;
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 1; c <= n; ++c) {
      if (lt(p, c, a) && (reach[static_cast<std::size_t>(a)] & bits::column(c))) out.erase(c, a);
    }
  }
  return out;
}

Relation woip_deletion(const Relation& p) {
  return iwoip_increasing_deletion(dwoip_decreasing_deletion(p));
}

Relation toip_deletion(const Relation& p) {
  require_poset(p, "toip_deletion");
  const int n = p.size();
  Relation out = p;
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 2; c <= n; ++c) {
      bool drop_up = false;
      bool drop_down = false;
      for (int b = a + 1; b < c; ++b) {
        drop_up = drop_up || !lt(p, b, c);
        drop_down = drop_down || !lt(p, b, a);
      }
      if (drop_up) out.erase(a, c);
      if (drop_down) out.erase(c, a);
    }
  }
  return out;
}

Relation woep_id(const Relation& p) { return maxle(iwoip_increasing_deletion(p)); }

Relation woep_dd(const Relation& p) { return minle(dwoip_decreasing_deletion(p)); }

std::string_view to_string(ProjectionMap m) {
  switch (m) {
    case ProjectionMap::IWOIPid: return "IWOIPid";
    case ProjectionMap::DWOIPdd: return "DWOIPdd";
    case ProjectionMap::WOIPd: return "WOIPd";
    case ProjectionMap::TOIPd: return "TOIPd";
    case ProjectionMap::WOEPid: return "WOEPid";
    case ProjectionMap::WOEPdd: return "WOEPdd";
  }
  return "?";
}

ProjectionMap parse_projection_map(std::string_view text) {
  for (auto m : {ProjectionMap::IWOIPid, ProjectionMap::DWOIPdd, ProjectionMap::WOIPd,
                 ProjectionMap::TOIPd, ProjectionMap::WOEPid, ProjectionMap::WOEPdd}) {
    if (to_string(m) == text) return m;
  }
  throw InputError("unknown projection map '" + std::string(text) +
                   "' (expected IWOIPid, DWOIPdd, WOIPd, TOIPd, WOEPid or WOEPdd)");
}

Relation apply_projection(ProjectionMap m, const Relation& p) {
  switch (m) {
    case ProjectionMap::IWOIPid: return iwoip_increasing_deletion(p);
    case ProjectionMap::DWOIPdd: return dwoip_decreasing_deletion(p);
    case ProjectionMap::WOIPd: return woip_deletion(p);
    case ProjectionMap::TOIPd: return toip_deletion(p);
    case ProjectionMap::WOEPid: return woep_id(p);
    case ProjectionMap::WOEPdd: return woep_dd(p);
  }
  throw InputError("unknown projection map");
}

Family image_family(ProjectionMap m) {
  switch (m) {
    case ProjectionMap::IWOIPid: return Family::IWOIP;
    case ProjectionMap::DWOIPdd: return Family::DWOIP;
    case ProjectionMap::WOIPd: return Family::WOIP;
    case ProjectionMap::TOIPd: return Family::TOIP;
    case ProjectionMap::WOEPid:
    case ProjectionMap::WOEPdd: return Family::WOEP;
  }
  return Family::IPos;
}

BinaryTree bst_insert(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> left(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> right(static_cast<std::size_t>(n) + 1, 0);
  int root = 0;
  for (int i = n; i >= 1; --i) {
    const int v = sigma.at(i);
    if (root == 0) {
      root = v;
      continue;
    }
    int at = root;
    while (true) {
      int& slot = v < at ? left[static_cast<std::size_t>(at)] : right[static_cast<std::size_t>(at)];
      if (slot == 0) {
        slot = v;
        break;
      }
      at = slot;
    }
  }
  // Rebuild through node() so the result carries canonical inorder labels.
  auto build = [&](auto&& self, int v) -> BinaryTree {
    if (v == 0) return BinaryTree();
    return BinaryTree::node(self(self, left[static_cast<std::size_t>(v)]),
                            self(self, right[static_cast<std::size_t>(v)]));
  };
  return build(build, root);
}

SchroderTree schroder_insert(const OrderedPartition& pi) {
  const auto& blocks = pi.blocks();
  auto build = [&](auto&& self, int lo, int hi) -> SchroderTree {
    if (lo > hi) return SchroderTree();
    for (auto block = blocks.rbegin(); block != blocks.rend(); ++block) {
      std::vector<int> hits;
      for (int v : *block) {
        if (v >= lo && v <= hi) hits.push_back(v);
      }
      if (hits.empty()) continue;
      std::vector<SchroderTree> children;
      int start = lo;
      for (int v : hits) {
        children.push_back(self(self, start, v - 1));
        start = v + 1;
      }
      children.push_back(self(self, start, hi));
      return SchroderTree(std::move(children));
    }
    throw InputError("schroder_insert: values missing from partition");
  };
  return build(build, 1, pi.size());
}

bool projection_compatibility(const Permutation& sigma) {
  return toip_deletion(from_permutation(sigma)) == from_binary_tree(bst_insert(sigma));
}

bool projection_compatibility(const Permutation& lower, const Permutation& upper) {
  return toip_deletion(from_interval(lower, upper)) ==
         from_tree_interval(bst_insert(lower), bst_insert(upper));
}

bool projection_compatibility(const OrderedPartition& pi) {
  return toip_deletion(from_ordered_partition(pi)) == from_schroder_tree(schroder_insert(pi));
}

std::shared_ptr<const FiberTable> fiber_table(ProjectionMap m, Family domain, int n) {
  using Key = std::tuple<ProjectionMap, Family, int>;
  static std::shared_mutex guard;
  static std::map<Key, std::shared_ptr<const FiberTable>> cache;
  const Key key{m, domain, n};
  {
    std::shared_lock read(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<FiberTable>();
  for (const auto& p : enumerate_family(n, domain, EnumerationMode::Construct)) {
    (*table)[apply_projection(m, p)].push_back(p);
  }
  std::unique_lock write(guard);
  auto [it, inserted] = cache.emplace(key, std::move(table));
  return it->second;
}

std::vector<Relation> fiber(ProjectionMap m, const Relation& target, Family domain) {
  if (!is_in_family(target, image_family(m))) {
    throw InputError("fiber: target is not in the image family " +
                     std::string(to_string(image_family(m))));
  }
  const auto table = fiber_table(m, domain, target.size());
  auto it = table->find(target);
  return it == table->end() ? std::vector<Relation>{} : it->second;
}

}  // namespace intrel
