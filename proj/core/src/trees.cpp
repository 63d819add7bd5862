#include "intrel/trees.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "intrel/families.hpp"

namespace intrel {

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  const int nl = left.size();
  const int nr = right.size();
  const int n = nl + 1 + nr;
  if (n > kMaxSize) throw InputError("binary tree larger than " + std::to_string(kMaxSize));
  BinaryTree t;
  t.left_.assign(static_cast<std::size_t>(n) + 1, 0);
  t.right_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= nl; ++v) {
    t.left_[v] = left.left_[v];
    t.right_[v] = left.right_[v];
  }
  const int offset = nl + 1;
  for (int v = 1; v <= nr; ++v) {
    t.left_[v + offset] = right.left_[v] == 0 ? 0 : right.left_[v] + offset;
    t.right_[v + offset] = right.right_[v] == 0 ? 0 : right.right_[v] + offset;
  }
  t.root_ = offset;
  t.left_[offset] = left.root_;
  t.right_[offset] = nr == 0 ? 0 : right.root_ + offset;
  return t;
}

BinaryTree BinaryTree::left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = node(t, BinaryTree());
  return t;
}

BinaryTree BinaryTree::right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = node(BinaryTree(), t);
  return t;
}

namespace {

// Copies the subtree rooted at `top` whose labels form lo..hi, relabelled from 1.
BinaryTree extract(const BinaryTree& t, int top, int lo, int hi) {
  if (top == 0) return BinaryTree();
  const BinaryTree left = extract(t, t.left(top), lo, top - 1);
  const BinaryTree right = extract(t, t.right(top), top + 1, hi);
  return BinaryTree::node(left, right);
}

}  // namespace

BinaryTree BinaryTree::left_subtree() const {
  if (empty()) throw InputError("left_subtree of an empty tree");
  return extract(*this, left(root_), 1, root_ - 1);
}

BinaryTree BinaryTree::right_subtree() const {
  if (empty()) throw InputError("right_subtree of an empty tree");
  return extract(*this, right(root_), root_ + 1, size());
}

std::vector<BinaryTree> BinaryTree::right_rotations() const {
  const int n = size();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (left_[v] != 0) parent[left_[v]] = v;
    if (right_[v] != 0) parent[right_[v]] = v;
  }
  std::vector<BinaryTree> out;
  for (int y = 1; y <= n; ++y) {
    const int x = left_[y];
    if (x == 0) continue;
    BinaryTree t = *this;
    const int p = parent[y];
    t.left_[y] = right_[x];
    t.right_[x] = y;
    if (p == 0) {
      t.root_ = x;
    } else if (t.left_[p] == y) {
      t.left_[p] = x;
    } else {
      t.right_[p] = x;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<BinaryTree> all_binary_trees(int n) {
  if (n < 0) throw InputError("all_binary_trees: negative size");
  if (n > kMaxSize) throw LimitError("all_binary_trees: size too large");
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].emplace_back();
  for (int k = 1; k <= n; ++k) {
    for (int nl = 0; nl < k; ++nl) {
      for (const auto& left : by_size[nl]) {
        for (const auto& right : by_size[k - 1 - nl]) {
          by_size[k].push_back(BinaryTree::node(left, right));
        }
      }
    }
  }
  auto out = std::move(by_size[n]);
  std::sort(out.begin(), out.end());
  return out;
}

Relation from_binary_tree(const BinaryTree& t) {
  const int n = t.size();
  Relation r(n);
  std::vector<RowMask> below(static_cast<std::size_t>(n) + 1, 0);
  // Post-order accumulation of descendant sets.
  std::vector<std::pair<int, bool>> stack;
  if (n > 0) stack.emplace_back(t.root(), false);
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (!done) {
      stack.emplace_back(v, true);
      if (t.left(v) != 0) stack.emplace_back(t.left(v), false);
      if (t.right(v) != 0) stack.emplace_back(t.right(v), false);
      continue;
    }
    RowMask mask = 0;
    for (int child : {t.left(v), t.right(v)}) {
      if (child != 0) mask |= below[child] | bits::column(child);
    }
    below[v] = mask;
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (below[j] & bits::column(i)) r.insert(i, j);
    }
  }
  return r;
}

namespace {

BinaryTree rebuild(const Relation& p, int lo, int hi) {
  if (lo > hi) return BinaryTree();
  int top = 0;
  for (int v = lo; v <= hi && top == 0; ++v) {
    // v is the top when every other element of the block lies below it
    bool dominates = true;
    for (int w = lo; w <= hi && dominates; ++w) dominates = (w == v) || p.contains(w, v);
    if (dominates) top = v;
  }
  if (top == 0) throw InputError("to_binary_tree: block has no maximum");
  return BinaryTree::node(rebuild(p, lo, top - 1), rebuild(p, top + 1, hi));
}

class TamariTable {
 public:
  explicit TamariTable(int n) : trees_(all_binary_trees(n)) {
    for (std::size_t i = 0; i < trees_.size(); ++i) index_.emplace(trees_[i], static_cast<int>(i));
    const std::size_t count = trees_.size();
    words_ = (count + 63) / 64;
    reach_.assign(count * words_, 0);
    std::vector<std::vector<int>> up(count);
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& next : trees_[i].right_rotations()) {
        const int j = index_.at(next);
        up[i].push_back(j);
        covers_.emplace_back(static_cast<int>(i), j);
      }
    }
    std::sort(covers_.begin(), covers_.end());
    std::vector<int> queue;
    for (std::size_t i = 0; i < count; ++i) {
      queue.assign(1, static_cast<int>(i));
      set(i, i);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int j : up[static_cast<std::size_t>(queue[head])]) {
          if (!get(i, static_cast<std::size_t>(j))) {
            set(i, static_cast<std::size_t>(j));
            queue.push_back(j);
          }
        }
      }
    }
  }

  int index_of(const BinaryTree& t) const { return index_.at(t); }
  bool le(int i, int j) const { return get(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  const std::vector<BinaryTree>& trees() const { return trees_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

 private:
  bool get(std::size_t i, std::size_t j) const { return (reach_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { reach_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::vector<BinaryTree> trees_;
  std::map<BinaryTree, int> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> reach_;
  std::vector<std::pair<int, int>> covers_;
};

constexpr int kTamariLimit = 8;

const TamariTable& tamari_table(int n) {
  if (n < 0 || n > kTamariLimit) {
    throw LimitError("Tamari comparisons support sizes 0.." + std::to_string(kTamariLimit));
  }
  static std::mutex guard;
  static std::map<int, std::unique_ptr<TamariTable>> tables;
  std::lock_guard lock(guard);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<TamariTable>(n);
  return *slot;
}

}  // namespace

BinaryTree to_binary_tree(const Relation& p) {
  if (!is_in_family(p, Family::TOEP)) throw InputError("to_binary_tree: input is not a TOEP");
  return rebuild(p, 1, p.size());
}

bool tamari_le(const BinaryTree& t, const BinaryTree& u) {
  if (t.size() != u.size()) throw InputError("tamari_le: size mismatch");
  const auto& table = tamari_table(t.size());
  return table.le(table.index_of(t), table.index_of(u));
}

std::vector<BinaryTree> tamari_up_set(const BinaryTree& t) {
  const auto& table = tamari_table(t.size());
  const int i = table.index_of(t);
  std::vector<BinaryTree> out;
  for (std::size_t j = 0; j < table.trees().size(); ++j) {
    if (table.le(i, static_cast<int>(j))) out.push_back(table.trees()[j]);
  }
  return out;
}

std::vector<std::pair<int, int>> tamari_covers(int n) { return tamari_table(n).covers(); }

Relation from_tree_interval(const BinaryTree& lower, const BinaryTree& upper) {
  if (!tamari_le(lower, upper)) {
    throw InputError("from_tree_interval: lower tree is not below upper in the Tamari order");
  }
  const Relation low = from_binary_tree(lower);
  const Relation high = from_binary_tree(upper);
  Relation out(lower.size());
  for (int u = 1; u <= out.size(); ++u) {
    out.set_row(u, (high.row(u) & bits::columns(u + 1, out.size())) |
                       (low.row(u) & bits::columns(1, u - 1)));
  }
  return out;
}

SchroderTree::SchroderTree(std::vector<SchroderTree> children) : children_(std::move(children)) {
  if (children_.size() < 2) throw InputError("a Schroder tree node needs at least two children");
  angles_ = static_cast<int>(children_.size()) - 1;
  for (const auto& child : children_) angles_ += child.angles_;
  if (angles_ > kMaxSize) throw InputError("Schroder tree larger than " + std::to_string(kMaxSize));
}

std::vector<SchroderTree> all_schroder_trees(int n) {
  if (n < 0) throw InputError("all_schroder_trees: negative size");
  if (n > kMaxSize) throw LimitError("all_schroder_trees: size too large");
  std::vector<std::vector<SchroderTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].emplace_back();
  for (int k = 1; k <= n; ++k) {
    // children sizes s_0..s_d with d >= 1 and s_0 + ... + s_d + d = k
    std::vector<SchroderTree> children;
    std::function<void(int, int)> grow = [&](int remaining, int placed) {
      // option: close the node here, using `remaining` for the last child
      if (placed >= 1) {
        for (const auto& last : by_size[remaining]) {
          children.push_back(last);
          by_size[k].emplace_back(children);
          children.pop_back();
        }
      }
      // option: place another child followed by an angle
      for (int s = 0; s + 1 <= remaining; ++s) {
        for (const auto& child : by_size[s]) {
          children.push_back(child);
          grow(remaining - s - 1, placed + 1);
          children.pop_back();
        }
      }
    };
    grow(k, 0);
  }
  auto out = std::move(by_size[n]);
  std::sort(out.begin(), out.end());
  return out;
}

SchroderTree to_schroder_tree(const BinaryTree& t) {
  if (t.empty()) return SchroderTree();
  return SchroderTree({to_schroder_tree(t.left_subtree()), to_schroder_tree(t.right_subtree())});
}

namespace {

// Labels the angles of s in inorder starting at `next`, records the cover
// pairs into r and returns the mask of labels used.
RowMask label_angles(const SchroderTree& s, int& next, Relation& r) {
  if (s.is_leaf()) return 0;
  const auto& kids = s.children();
  std::vector<RowMask> below(kids.size(), 0);
  std::vector<int> angle(kids.size() - 1, 0);
  RowMask all = 0;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    below[i] = label_angles(kids[i], next, r);
    all |= below[i];
    if (i + 1 < kids.size()) {
      angle[i] = next++;
      all |= bits::column(angle[i]);
    }
  }
  for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
    const RowMask under = below[i] | below[i + 1];
    for (int v = 1; v <= r.size(); ++v) {
      if (under & bits::column(v)) r.insert(v, angle[i]);
    }
  }
  return all;
}

}  // namespace

Relation from_schroder_tree(const SchroderTree& s) {
  Relation r(s.size());
  int next = 1;
  label_angles(s, next, r);
  return r;
}

bool operator==(const SchroderTree& a, const SchroderTree& b) { return a.children_ == b.children_; }

std::strong_ordering operator<=>(const SchroderTree& a, const SchroderTree& b) {
  const std::size_t common = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (const auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  }
  return a.children_.size() <=> b.children_.size();
}

}  // namespace intrel
