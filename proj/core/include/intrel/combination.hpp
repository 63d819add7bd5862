#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "intrel/errors.hpp"
#include "intrel/relation.hpp"

namespace intrel {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("coefficient overflow in addition");
  return out;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("coefficient overflow in multiplication");
  }
  return out;
}

/// A finite formal sum of keys with nonzero integer coefficients, kept in the
/// canonical key order so that iteration and equality are deterministic.
template <class Key>
class Combination {
 public:
  using Map = std::map<Key, Coeff>;
  using const_iterator = typename Map::const_iterator;

  Combination() = default;
  explicit Combination(const Key& key, Coeff c = 1) { add(key, c); }

  void add(const Key& key, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  Combination& operator+=(const Combination& other) {
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [key, c] : other.terms_) add(key, checked_mul(c, -1));
    return *this;
  }
  Combination& operator*=(Coeff factor) {
    if (factor == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_) entry.second = checked_mul(entry.second, factor);
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

using RelationPair = std::pair<Relation, Relation>;
using LinearCombination = Combination<Relation>;
using TensorCombination = Combination<RelationPair>;

}  // namespace intrel
