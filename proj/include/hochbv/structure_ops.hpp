#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "hochbv/hochschild.hpp"

namespace hochbv {

inline LinearCombination<GroupElement> as_letter(const ModuleVector& v) {
  return v.map_keys<GroupElement>([](const ModuleKey& k) { return element_of(k); });
}

inline void check_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) fail(ErrorCode::RingMismatch, a.to_string() + " vs " + b.to_string());
}

// Zero cochain of the given arity; arity -1 stands for the zero class in cochain degree +1.
inline HochschildCochain zero_cochain(int arity, BimodulePtr target, Ring ring) {
  return HochschildCochain(arity, std::move(target), ring, HochschildCochain::Backend::Rule,
                           [ring](const Word&) { return ModuleVector(ring); });
}

// sum_i c_i f_i for cochains of equal arity and target.
inline HochschildCochain linear_combination(const std::vector<std::pair<Scalar, HochschildCochain>>& parts) {
  if (parts.empty()) fail(ErrorCode::InvalidSpec, "empty cochain combination");
  const HochschildCochain& first = parts.front().second;
  bool normalized = true;
  for (const auto& [c, f] : parts) {
    if (f.arity() != first.arity()) fail(ErrorCode::InvalidSpec, "cochain arities differ");
    if (!(*f.target() == *first.target())) fail(ErrorCode::BimoduleMismatch, "cochain targets differ");
    check_ring(f.ring(), first.ring());
    normalized = normalized && f.normalized();
  }
  const Ring ring = first.ring();
  return HochschildCochain(first.arity(), first.target(), ring, HochschildCochain::Backend::Rule,
                           [parts, ring](const Word& w) {
                             ModuleVector out(ring);
                             for (const auto& [c, f] : parts) out.add_scaled(f(w), c);
                             return out;
                           },
                           normalized);
}

namespace detail {

inline HochschildChain cap_impl(const HochschildChain& c, const HochschildCochain& f, bool koszul) {
  check_ring(c.ring(), f.ring());
  const BalancedProduct bp = balanced_product(c.module(), f.target());
  const Ring ring = c.ring();
  const std::size_t p = static_cast<std::size_t>(f.arity());
  HochschildChain out(bp.result, ring);
  if (f.arity() < 0) return out;
  for (const auto& [w, coef] : c.terms()) {
    const std::size_t n = w.letters.size();
    if (n < p) continue;
    const Scalar s = koszul ? sign_scalar(ring, static_cast<int>(p * n)) * coef : coef;
    const Word prefix(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(p));
    const Word suffix(w.letters.begin() + static_cast<std::ptrdiff_t>(p), w.letters.end());
    for (const auto& [q, v] : f(prefix)) out.add(BarWord{bp.combine(w.m, q), suffix}, s * v);
  }
  return out;
}

}  // namespace detail

// (m[a_1..a_n]) cap f = (-1)^{pn} (m f(a_1..a_p))[a_{p+1}..a_n], landing in C_*(A, P (x)_A Q).
inline HochschildChain cap(const HochschildChain& c, const HochschildCochain& f) { return detail::cap_impl(c, f, true); }

// i_f(c) = (-1)^{|c||f|} c cap f.
inline HochschildChain left_action(const HochschildCochain& f, const HochschildChain& c) {
  return detail::cap_impl(c, f, false);
}

// Pushes chain coefficients along a bimodule map given on basis keys (identity or augmentation).
inline HochschildChain map_coefficients(const HochschildChain& c, BimodulePtr target,
                                        const std::function<ModuleKey(const ModuleKey&)>& on_keys) {
  HochschildChain out(std::move(target), c.ring());
  for (const auto& [w, coef] : c.terms()) out.add(BarWord{on_keys(w.m), w.letters}, coef);
  return out;
}

// Composite cap C_*(A, A) (x) C^*(A, k) -> C_*(A, k) through the augmentation A -> k.
inline HochschildChain cap_via_augmentation(const HochschildChain& c, const HochschildCochain& f) {
  if (c.module()->kind() != BimoduleKind::Regular) fail(ErrorCode::BimoduleMismatch, "composite cap expects chains in A");
  return cap(map_coefficients(c, Bimodule::trivial(c.group()), augmentation_map), f);
}

// (f cup g)(a_1..a_{p+q}) = (-1)^{pq} f(a_1..a_p) g(a_{p+1}..a_{p+q}).
inline HochschildCochain cup(const HochschildCochain& f, const HochschildCochain& g) {
  check_ring(f.ring(), g.ring());
  const BalancedProduct bp = balanced_product(f.target(), g.target());
  const int p = f.arity(), q = g.arity();
  const Ring ring = f.ring();
  if (p < 0 || q < 0) return zero_cochain(p + q, bp.result, ring);
  const Scalar s = sign_scalar(ring, p * q);
  return HochschildCochain(p + q, bp.result, ring, HochschildCochain::Backend::Rule,
                           [f, g, bp, p, s](const Word& w) {
                             const Word head(w.begin(), w.begin() + p);
                             const Word tail(w.begin() + p, w.end());
                             return tensor_values(bp, f(head), g(tail)).scaled(s);
                           },
                           f.normalized() && g.normalized());
}

inline void require_coefficients_in_A(const HochschildCochain& f) {
  if (f.target()->kind() != BimoduleKind::Regular)
    fail(ErrorCode::CoefficientsNotInA, "bracket needs coefficients in A, got " + f.target()->name());
}

// (f o g)(a_1..a_{p+q-1}) = sum_i (-1)^{(i-1)(q-1)} f(a_1..a_{i-1}, g(a_i..a_{i+q-1}), ..).
inline HochschildCochain circle_product(const HochschildCochain& f, const HochschildCochain& g) {
  require_coefficients_in_A(f);
  require_coefficients_in_A(g);
  check_ring(f.ring(), g.ring());
  const int p = f.arity(), q = g.arity();
  const Ring ring = f.ring();
  if (p <= 0 || q < 0) return zero_cochain(p + q - 1, f.target(), ring);
  return HochschildCochain(p + q - 1, f.target(), ring, HochschildCochain::Backend::Rule,
                           [f, g, p, q, ring](const Word& w) {
                             ModuleVector out(ring);
                             for (int i = 1; i <= p; ++i) {
                               std::vector<LinearCombination<GroupElement>> letters;
                               for (int j = 0; j < i - 1; ++j) letters.emplace_back(ring, w[static_cast<std::size_t>(j)]);
                               const Word inner(w.begin() + (i - 1), w.begin() + (i - 1 + q));
                               const auto value = as_letter(g(inner));
                               if (value.is_zero()) continue;
                               letters.push_back(value);
                               for (std::size_t j = static_cast<std::size_t>(i - 1 + q); j < w.size(); ++j)
                                 letters.emplace_back(ring, w[j]);
                               out.add_scaled(f.evaluate(letters), sign_scalar(ring, (i - 1) * (q - 1)));
                             }
                             return out;
                           },
                           f.normalized() && g.normalized());
}

// {f,g} = f o g - (-1)^{(p-1)(q-1)} g o f.
inline HochschildCochain gerstenhaber_bracket(const HochschildCochain& f, const HochschildCochain& g) {
  const int p = f.arity(), q = g.arity();
  const Ring ring = f.ring();
  return linear_combination({{Scalar::one(ring), circle_product(f, g)}, {-sign_scalar(ring, (p - 1) * (q - 1)), circle_product(g, f)}});
}

// L_a(c) = B(i_a c) - (-1)^{|a|} i_a(B c) on a cycle c.
inline HochschildChain lie_derivative(const HochschildCochain& a, const HochschildChain& c) {
  if (!normalized_differential(c).is_zero()) fail(ErrorCode::NotACycle, "Lie derivative needs a cycle");
  const Ring ring = c.ring();
  return connes_B(left_action(a, c)) - left_action(a, connes_B(c)).scaled(sign_scalar(ring, a.arity()));
}

// [[i_a, B], i_b](c) with graded commutators; |i_a| = -p, |B| = 1.
inline HochschildChain derived_action(const HochschildCochain& a, const HochschildCochain& b, const HochschildChain& c,
                                      int b_sign = 1) {
  const Ring ring = c.ring();
  const int p = a.arity(), q = b.arity();
  auto T = [&](const HochschildChain& x) {
    return left_action(a, connes_B(x, b_sign)) - connes_B(left_action(a, x), b_sign).scaled(sign_scalar(ring, p));
  };
  return T(left_action(b, c)) - left_action(b, T(c)).scaled(sign_scalar(ring, (1 - p) * q));
}

// ---- cap product of a coalgebra with its dual

// Element of the reduced bar coalgebra of k[G].
using BarElement = LinearCombination<Word>;

// Homogeneous functional on words of length p.
struct BarFunctional {
  int arity;
  std::function<Scalar(const Word&)> eval;
};

// c cap phi = ev o (C (x) tau) o (Delta (x) C^v): for c = [a_1..a_n] the deconcatenation term
// [a_1..a_p] (x) [a_{p+1}..a_n] picks up (-1)^{p(n-p)} from tau and (-1)^{p p} from ev.
inline BarElement coalgebra_cap(const BarElement& c, const BarFunctional& phi) {
  const Ring ring = c.ring();
  BarElement out(ring);
  const std::size_t p = static_cast<std::size_t>(phi.arity);
  for (const auto& [w, coef] : c) {
    const std::size_t n = w.size();
    if (n < p) continue;
    const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    const Word tail(w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
    const int twist = static_cast<int>(p * (n - p));
    const int ev = static_cast<int>(p * p);
    out.add(tail, sign_scalar(ring, twist + ev) * coef * phi.eval(head));
  }
  return out;
}

// Finite-dimensional graded coalgebra given by coproduct tables.
class FiniteCoalgebra {
 public:
  struct Term {
    std::size_t left, right;
    Scalar coef;
  };

  FiniteCoalgebra(Ring ring, std::vector<int> degrees, std::vector<std::vector<Term>> coproduct)
      : ring_(ring), degrees_(std::move(degrees)), coproduct_(std::move(coproduct)) {
    if (coproduct_.size() != degrees_.size()) fail(ErrorCode::InvalidSpec, "coproduct table size mismatch");
  }

  // Reduced bar coalgebra of k[G] truncated at word length max_length (closed under deconcatenation).
  static FiniteCoalgebra truncated_bar(const GroupPtr& G, Ring ring, int max_length, std::vector<Word>* words_out = nullptr) {
    if (!G->is_finite()) fail(ErrorCode::NotFiniteDimensional, "bar coalgebra of " + G->name() + " is not finite-dimensional");
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
    const auto alphabet = G->non_identity_elements();
    for (int n = 0; n <= max_length; ++n) {
      const WordIndexer W(alphabet, *G, static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < W.count(); ++i) {
        index.emplace(W.word(i), words.size());
        words.push_back(W.word(i));
      }
    }
    std::vector<int> degrees;
    std::vector<std::vector<Term>> coproduct;
    for (const auto& w : words) {
      degrees.push_back(static_cast<int>(w.size()));
      std::vector<Term> terms;
      for (std::size_t p = 0; p <= w.size(); ++p)
        terms.push_back({index.at(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p))),
                         index.at(Word(w.begin() + static_cast<std::ptrdiff_t>(p), w.end())), Scalar::one(ring)});
      coproduct.push_back(std::move(terms));
    }
    if (words_out) *words_out = words;
    return FiniteCoalgebra(ring, std::move(degrees), std::move(coproduct));
  }

  std::size_t dimension() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const Ring& ring() const { return ring_; }

  // phi is a functional concentrated on basis elements of degree phi_degree (|phi| = -phi_degree).
  SparseVector cap(const SparseVector& c, const SparseVector& phi, int phi_degree) const {
    SparseVector out(ring_);
    for (const auto& [i, ci] : c)
      for (const Term& t : coproduct_.at(i)) {
        if (degrees_[t.left] != phi_degree) continue;
        const Scalar value = phi.coefficient(t.left);
        if (value.is_zero()) continue;
        const int twist = phi_degree * degrees_[t.right];
        const int ev = phi_degree * degrees_[t.left];
        out.add(t.right, sign_scalar(ring_, twist + ev) * ci * t.coef * value);
      }
    return out;
  }

  // Convolution product on the dual: (phi cup psi)(x) = sum (-1)^{|psi||x'|} phi(x') psi(x'').
  SparseVector convolution(const SparseVector& phi, int p, const SparseVector& psi, int q) const {
    SparseVector out(ring_);
    for (std::size_t i = 0; i < dimension(); ++i)
      for (const Term& t : coproduct_[i]) {
        if (degrees_[t.left] != p || degrees_[t.right] != q) continue;
        const Scalar v = phi.coefficient(t.left) * psi.coefficient(t.right);
        if (v.is_zero()) continue;
        out.add(i, sign_scalar(ring_, p * q) * t.coef * v);
      }
    return out;
  }

 private:
  Ring ring_;
  std::vector<int> degrees_;
  std::vector<std::vector<Term>> coproduct_;
};

}  // namespace hochbv
