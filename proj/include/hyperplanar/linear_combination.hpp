// Finite formal Z[v, v^-1]-linear combinations over an ordered key type.

#pragma once

#include <functional>
#include <map>
#include <type_traits>
#include <utility>

#include "hyperplanar/coeff.hpp"

namespace hyperplanar {

/// Sparse map Key -> LaurentInt with no zero coefficients stored.
template <typename Key, typename Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, LaurentInt, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key k, LaurentInt c = LaurentInt(1)) { add(std::move(k), std::move(c)); }

  void add(const Key& k, const LaurentInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const LinearCombination& o, const LaurentInt& scale = LaurentInt(1)) {
    if (scale.is_zero()) return;
    const bool unit = scale.is_one();
    for (const auto& [k, c] : o.terms_) add(k, unit ? c : c * scale);
  }

  LaurentInt coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentInt() : it->second;
  }
  bool contains(const Key& k) const { return terms_.count(k) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinearCombination scaled(const LaurentInt& s) const {
    LinearCombination r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c * s);
    return r;
  }
  /// Apply bar to every coefficient.
  LinearCombination bar_coefficients() const {
    LinearCombination r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c.bar());
    return r;
  }
  /// Linear map induced by a function on keys.
  template <typename F>
  auto map_keys(F&& f) const {
    LinearCombination<std::decay_t<std::invoke_result_t<F, const Key&>>> r;
    for (const auto& [k, c] : terms_) r.add(f(k), c);
    return r;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, LaurentInt(-1));
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(const LinearCombination& a) { return a.scaled(LaurentInt(-1)); }
  friend LinearCombination operator*(const LaurentInt& s, const LinearCombination& a) { return a.scaled(s); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinearCombination& a, const LinearCombination& b) { return !(a == b); }

 private:
  map_type terms_;
};

}  // namespace hyperplanar
