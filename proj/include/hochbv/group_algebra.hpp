#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hochbv/group.hpp"
#include "hochbv/linear_combination.hpp"

namespace hochbv {

// Element of k[G].
class GroupAlgebraElement {
 public:
  using Terms = LinearCombination<GroupElement>;

  GroupAlgebraElement(GroupPtr group, Ring ring) : group_(std::move(group)), terms_(ring) {}
  GroupAlgebraElement(GroupPtr group, Terms terms) : group_(std::move(group)), terms_(std::move(terms)) {}

  static GroupAlgebraElement basis(GroupPtr group, Ring ring, const GroupElement& g) {
    GroupAlgebraElement x(std::move(group), ring);
    x.terms_.add(g, Scalar::one(ring));
    return x;
  }
  static GroupAlgebraElement unit(GroupPtr group, Ring ring) {
    const GroupElement e = group->identity();
    return basis(std::move(group), ring, e);
  }

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return terms_.ring(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Scalar coefficient(const GroupElement& g) const { return terms_.coefficient(g); }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check_compatible(o);
    terms_ += o.terms_;
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check_compatible(o);
    terms_ -= o.terms_;
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  GroupAlgebraElement scaled(const Scalar& c) const { return GroupAlgebraElement(group_, terms_.scaled(c)); }

  friend GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    x.check_compatible(y);
    Terms out(x.ring());
    for (const auto& [g, a] : x.terms_)
      for (const auto& [h, b] : y.terms_) out.add(x.group_->multiply(g, h), a * b);
    return GroupAlgebraElement(x.group_, std::move(out));
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) { return multiply(x, y); }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return *a.group_ == *b.group_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_string() + "*" + group_->format(g);
    }
    return out;
  }

 private:
  void check_compatible(const GroupAlgebraElement& o) const {
    if (!(*group_ == *o.group_)) fail(ErrorCode::GroupMismatch, group_->name() + " vs " + o.group_->name());
    if (!(ring() == o.ring())) fail(ErrorCode::RingMismatch, ring().to_string() + " vs " + o.ring().to_string());
  }

  GroupPtr group_;
  Terms terms_;
};

inline Scalar augment(const GroupAlgebraElement& x) {
  Scalar s = Scalar::zero(x.ring());
  for (const auto& [g, c] : x.terms()) s += c;
  return s;
}

// Element of A^e = k[G x G^op]: (g, h) (g', h') = (g g', h' h).
class EnvelopingElement {
 public:
  using Key = std::pair<GroupElement, GroupElement>;
  using Terms = LinearCombination<Key>;

  EnvelopingElement(GroupPtr group, Ring ring) : group_(std::move(group)), terms_(ring) {}
  EnvelopingElement(GroupPtr group, Terms terms) : group_(std::move(group)), terms_(std::move(terms)) {}

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return terms_.ring(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  void add(const GroupElement& g, const GroupElement& h, const Scalar& c) { terms_.add(Key{g, h}, c); }
  EnvelopingElement& operator+=(const EnvelopingElement& o) {
    terms_ += o.terms_;
    return *this;
  }

  friend EnvelopingElement multiply(const EnvelopingElement& x, const EnvelopingElement& y) {
    if (!(*x.group_ == *y.group_)) fail(ErrorCode::GroupMismatch, "enveloping algebras of different groups");
    Terms out(x.ring());
    for (const auto& [k1, a] : x.terms_)
      for (const auto& [k2, b] : y.terms_)
        out.add(Key{x.group_->multiply(k1.first, k2.first), x.group_->multiply(k2.second, k1.second)}, a * b);
    return EnvelopingElement(x.group_, std::move(out));
  }

  friend bool operator==(const EnvelopingElement& a, const EnvelopingElement& b) {
    return *a.group_ == *b.group_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_string() + "*(" + group_->format(k.first) + "|" + group_->format(k.second) + ")";
    }
    return out;
  }

 private:
  GroupPtr group_;
  Terms terms_;
};

// E: k[G] -> A^e, g |-> (g, g^{-1}).
inline EnvelopingElement embed_E(const GroupAlgebraElement& x) {
  EnvelopingElement out(x.group(), x.ring());
  for (const auto& [g, c] : x.terms()) out.add(g, x.group()->inverse(g), c);
  return out;
}
inline EnvelopingElement embed_E(const GroupPtr& group, Ring ring, const GroupElement& g) {
  return embed_E(GroupAlgebraElement::basis(group, ring, g));
}

// Basis key of a permutation bimodule.
struct ModuleKey {
  std::vector<std::int64_t> c;
  friend auto operator<=>(const ModuleKey&, const ModuleKey&) = default;
  friend bool operator==(const ModuleKey&, const ModuleKey&) = default;
};

inline ModuleKey key_of(const GroupElement& g) { return ModuleKey{g.c}; }
inline GroupElement element_of(const ModuleKey& k) { return GroupElement{k.c}; }

enum class BimoduleKind { Regular, Trivial, Outer };

class Bimodule;
using BimodulePtr = std::shared_ptr<const Bimodule>;

// Permutation bimodules over k[G]: A itself, the trivial module k, and A (x) A with
// the outer structure g (x (x) y) h = g x (x) y h.
class Bimodule {
 public:
  static BimodulePtr regular(GroupPtr g) { return BimodulePtr(new Bimodule(BimoduleKind::Regular, std::move(g))); }
  static BimodulePtr trivial(GroupPtr g) { return BimodulePtr(new Bimodule(BimoduleKind::Trivial, std::move(g))); }
  static BimodulePtr outer(GroupPtr g) { return BimodulePtr(new Bimodule(BimoduleKind::Outer, std::move(g))); }

  BimoduleKind kind() const { return kind_; }
  const GroupPtr& group() const { return group_; }

  std::string name() const {
    switch (kind_) {
      case BimoduleKind::Regular: return "A";
      case BimoduleKind::Trivial: return "k";
      case BimoduleKind::Outer: return "A(x)A";
    }
    return "?";
  }

  ModuleKey left(const GroupElement& g, const ModuleKey& m) const {
    switch (kind_) {
      case BimoduleKind::Regular: return key_of(group_->multiply(g, element_of(m)));
      case BimoduleKind::Trivial: return m;
      case BimoduleKind::Outer: {
        auto [x, y] = split(m);
        return join(group_->multiply(g, x), y);
      }
    }
    return m;
  }
  ModuleKey right(const ModuleKey& m, const GroupElement& g) const {
    switch (kind_) {
      case BimoduleKind::Regular: return key_of(group_->multiply(element_of(m), g));
      case BimoduleKind::Trivial: return m;
      case BimoduleKind::Outer: {
        auto [x, y] = split(m);
        return join(x, group_->multiply(y, g));
      }
    }
    return m;
  }

  // Conjugation module: left g.m = g m g^{-1}; right m.g = g^{-1} m g (the single
  // left-to-right conversion used everywhere).
  ModuleKey conj_left(const GroupElement& g, const ModuleKey& m) const {
    return left(g, right(m, group_->inverse(g)));
  }
  ModuleKey conj_right(const ModuleKey& m, const GroupElement& g) const { return conj_left(group_->inverse(g), m); }

  ModuleKey unit() const {
    switch (kind_) {
      case BimoduleKind::Regular: return key_of(group_->identity());
      case BimoduleKind::Trivial: return ModuleKey{};
      case BimoduleKind::Outer: return join(group_->identity(), group_->identity());
    }
    return ModuleKey{};
  }

  std::vector<ModuleKey> basis() const {
    switch (kind_) {
      case BimoduleKind::Regular: {
        std::vector<ModuleKey> out;
        for (const auto& g : group_->elements()) out.push_back(key_of(g));
        return out;
      }
      case BimoduleKind::Trivial: return {ModuleKey{}};
      case BimoduleKind::Outer: {
        std::vector<ModuleKey> out;
        for (const auto& x : group_->elements())
          for (const auto& y : group_->elements()) out.push_back(join(x, y));
        return out;
      }
    }
    return {};
  }
  std::size_t dimension() const { return basis().size(); }
  std::size_t index(const ModuleKey& m) const {
    switch (kind_) {
      case BimoduleKind::Regular: return group_->index(element_of(m));
      case BimoduleKind::Trivial: return 0;
      case BimoduleKind::Outer: {
        auto [x, y] = split(m);
        return group_->index(x) * group_->order() + group_->index(y);
      }
    }
    return 0;
  }

  std::string format(const ModuleKey& m) const {
    switch (kind_) {
      case BimoduleKind::Regular: return group_->format(element_of(m));
      case BimoduleKind::Trivial: return "1";
      case BimoduleKind::Outer: {
        auto [x, y] = split(m);
        return group_->format(x) + "(x)" + group_->format(y);
      }
    }
    return "?";
  }

  std::pair<GroupElement, GroupElement> split(const ModuleKey& m) const {
    const std::size_t n = group_->coordinate_count();
    return {GroupElement{{m.c.begin(), m.c.begin() + static_cast<std::ptrdiff_t>(n)}},
            GroupElement{{m.c.begin() + static_cast<std::ptrdiff_t>(n), m.c.end()}}};
  }
  static ModuleKey join(const GroupElement& x, const GroupElement& y) {
    ModuleKey k{x.c};
    k.c.insert(k.c.end(), y.c.begin(), y.c.end());
    return k;
  }

  friend bool operator==(const Bimodule& a, const Bimodule& b) { return a.kind_ == b.kind_ && *a.group_ == *b.group_; }

 private:
  Bimodule(BimoduleKind kind, GroupPtr group) : kind_(kind), group_(std::move(group)) {}

  BimoduleKind kind_;
  GroupPtr group_;
};

using ModuleVector = LinearCombination<ModuleKey>;

// Realization of P (x)_A Q for the implemented pairs: A (x)_A Q = Q, P (x)_A A = P, k (x)_A k = k.
struct BalancedProduct {
  BimodulePtr result;
  std::function<ModuleKey(const ModuleKey&, const ModuleKey&)> combine;
};

inline BalancedProduct balanced_product(const BimodulePtr& P, const BimodulePtr& Q) {
  if (!(*P->group() == *Q->group())) fail(ErrorCode::GroupMismatch, "bimodules over different groups");
  if (P->kind() == BimoduleKind::Regular)
    return {Q, [Q](const ModuleKey& p, const ModuleKey& q) { return Q->left(element_of(p), q); }};
  if (Q->kind() == BimoduleKind::Regular)
    return {P, [P](const ModuleKey& p, const ModuleKey& q) { return P->right(p, element_of(q)); }};
  if (P->kind() == BimoduleKind::Trivial && Q->kind() == BimoduleKind::Trivial)
    return {P, [](const ModuleKey& p, const ModuleKey&) { return p; }};
  fail(ErrorCode::BimoduleMismatch, P->name() + " (x)_A " + Q->name() + " is not realized");
}

inline ModuleVector tensor_values(const BalancedProduct& bp, const ModuleVector& x, const ModuleVector& y) {
  ModuleVector out(x.ring());
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y) out.add(bp.combine(p, q), a * b);
  return out;
}

// Unit eta: k -> A and augmentation epsilon: A -> k on basis keys.
inline ModuleKey unit_map(const Bimodule& A, const ModuleKey&) { return A.unit(); }
inline ModuleKey augmentation_map(const ModuleKey&) { return ModuleKey{}; }

}  // namespace hochbv
