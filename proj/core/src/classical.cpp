#include "intrel/classical.hpp"

#include <algorithm>
#include <functional>

namespace intrel::classical {

Permutation standardize(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> shifted_shuffle(const Permutation& sigma, const Permutation& tau) {
  const int m = sigma.size();
  const int n = tau.size();
  std::vector<Permutation> out;
  std::vector<bool> take_left(static_cast<std::size_t>(m + n), false);
  std::fill(take_left.begin(), take_left.begin() + m, true);
  do {
    std::vector<int> word;
    int i = 1;
    int j = 1;
    for (bool left : take_left) word.push_back(left ? sigma.at(i++) : tau.at(j++) + m);
    out.emplace_back(std::move(word));
  } while (std::prev_permutation(take_left.begin(), take_left.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> convolution(const Permutation& sigma, const Permutation& tau) {
  const int m = sigma.size();
  const int n = tau.size();
  std::vector<Permutation> out;
  std::vector<bool> in_x(static_cast<std::size_t>(m + n), false);
  std::fill(in_x.begin(), in_x.begin() + m, true);
  do {
    std::vector<int> xs;
    std::vector<int> ys;
    for (int v = 1; v <= m + n; ++v) (in_x[static_cast<std::size_t>(v - 1)] ? xs : ys).push_back(v);
    std::vector<int> word;
    for (int i = 1; i <= m; ++i) word.push_back(xs[static_cast<std::size_t>(sigma.at(i) - 1)]);
    for (int i = 1; i <= n; ++i) word.push_back(ys[static_cast<std::size_t>(tau.at(i) - 1)]);
    out.emplace_back(std::move(word));
  } while (std::prev_permutation(in_x.begin(), in_x.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Permutation, Permutation>> deconcatenations(const Permutation& rho) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const auto& word = rho.word();
  for (std::size_t i = 0; i <= word.size(); ++i) {
    out.emplace_back(standardize(std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i))),
                     standardize(std::vector<int>(word.begin() + static_cast<std::ptrdiff_t>(i), word.end())));
  }
  return out;
}

OrderedPartition standardize(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> all;
  for (const auto& block : blocks) all.insert(all.end(), block.begin(), block.end());
  std::sort(all.begin(), all.end());
  std::vector<std::vector<int>> out;
  for (const auto& block : blocks) {
    std::vector<int> relabelled;
    for (int v : block) {
      relabelled.push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin()) + 1);
    }
    std::sort(relabelled.begin(), relabelled.end());
    out.push_back(std::move(relabelled));
  }
  return OrderedPartition(std::move(out));
}

std::vector<OrderedPartition> shifted_shuffle(const OrderedPartition& pi, const OrderedPartition& rho) {
  const auto& left = pi.blocks();
  std::vector<std::vector<int>> right = rho.blocks();
  for (auto& block : right) {
    for (int& v : block) v += pi.size();
  }
  std::vector<OrderedPartition> out;
  std::vector<std::vector<int>> prefix;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    if (i == left.size() && j == right.size()) {
      out.emplace_back(prefix);
      return;
    }
    if (i < left.size()) {
      prefix.push_back(left[i]);
      walk(i + 1, j);
      prefix.pop_back();
    }
    if (j < right.size()) {
      prefix.push_back(right[j]);
      walk(i, j + 1);
      prefix.pop_back();
    }
    if (i < left.size() && j < right.size()) {
      std::vector<int> merged = left[i];
      merged.insert(merged.end(), right[j].begin(), right[j].end());
      prefix.push_back(std::move(merged));
      walk(i + 1, j + 1);
      prefix.pop_back();
    }
  };
  walk(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderedPartition> convolution(const OrderedPartition& pi, const OrderedPartition& rho) {
  const int m = pi.size();
  const int n = rho.size();
  std::vector<OrderedPartition> out;
  std::vector<bool> in_x(static_cast<std::size_t>(m + n), false);
  std::fill(in_x.begin(), in_x.begin() + m, true);
  do {
    std::vector<int> xs;
    std::vector<int> ys;
    for (int v = 1; v <= m + n; ++v) (in_x[static_cast<std::size_t>(v - 1)] ? xs : ys).push_back(v);
    std::vector<std::vector<int>> blocks;
    auto relabel = [&](const std::vector<std::vector<int>>& source, const std::vector<int>& values) {
      for (const auto& block : source) {
        std::vector<int> mapped;
        for (int v : block) mapped.push_back(values[static_cast<std::size_t>(v - 1)]);
        blocks.push_back(std::move(mapped));
      }
    };
    relabel(pi.blocks(), xs);
    relabel(rho.blocks(), ys);
    out.emplace_back(std::move(blocks));
  } while (std::prev_permutation(in_x.begin(), in_x.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<OrderedPartition, OrderedPartition>> deconcatenations(
    const OrderedPartition& pi) {
  std::vector<std::pair<OrderedPartition, OrderedPartition>> out;
  const auto& blocks = pi.blocks();
  for (std::size_t k = 0; k <= blocks.size(); ++k) {
    out.emplace_back(standardize(std::vector<std::vector<int>>(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(k))),
                     standardize(std::vector<std::vector<int>>(blocks.begin() + static_cast<std::ptrdiff_t>(k), blocks.end())));
  }
  return out;
}

BinaryTree graft_left(const BinaryTree& lower, const BinaryTree& upper) {
  if (upper.empty()) return lower;
  return BinaryTree::node(graft_left(lower, upper.left_subtree()), upper.right_subtree());
}

BinaryTree graft_right(const BinaryTree& lower, const BinaryTree& upper) {
  if (lower.empty()) return upper;
  return BinaryTree::node(lower.left_subtree(), graft_right(lower.right_subtree(), upper));
}

std::vector<BinaryTree> tamari_product(const BinaryTree& s, const BinaryTree& t) {
  const BinaryTree bottom = graft_left(s, t);
  const BinaryTree top = graft_right(s, t);
  std::vector<BinaryTree> out;
  for (const auto& u : tamari_up_set(bottom)) {
    if (tamari_le(u, top)) out.push_back(u);
  }
  return out;
}

}  // namespace intrel::classical
