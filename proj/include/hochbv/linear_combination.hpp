#pragma once

#include <map>
#include <utility>

#include "hochbv/scalar.hpp"

namespace hochbv {

// Finitely supported Key -> Scalar map with no stored zeros; ordered by Key.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Scalar>;

  explicit LinearCombination(Ring ring = Ring::rationals()) : ring_(ring) {}
  LinearCombination(Ring ring, const Key& key) : ring_(ring) { add(key, Scalar::one(ring)); }

  const Ring& ring() const { return ring_; }

  void add(const Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const Key& key, long long c) { add(key, Scalar(ring_, c)); }

  // this += c * other
  void add_scaled(const LinearCombination& other, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  LinearCombination operator-() const { return scaled(Scalar(ring_, -1)); }

  LinearCombination scaled(const Scalar& c) const {
    LinearCombination out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, v * c);
    return out;
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  // Pushes forward along a key map Key -> Key2 (or Key -> LinearCombination<Key2>).
  template <class Key2, class F>
  LinearCombination<Key2> map_keys(F&& f) const {
    LinearCombination<Key2> out(ring_);
    for (const auto& [k, v] : terms_) out.add(f(k), v);
    return out;
  }
  template <class Key2, class F>
  LinearCombination<Key2> map_linear(F&& f) const {
    LinearCombination<Key2> out(ring_);
    for (const auto& [k, v] : terms_) out.add_scaled(f(k), v);
    return out;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  Map terms_;
};

}  // namespace hochbv
