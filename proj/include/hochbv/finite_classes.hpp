#pragma once

#include <memory>
#include <vector>

#include "hochbv/hochschild.hpp"

namespace hochbv {

// Homology and cohomology classes of the normalized complexes of k[G], G finite, over a
// field, in degrees 0..max_degree. Classes are compared by boundary membership.
class FiniteHH {
 public:
  FiniteHH(BimodulePtr M, Ring ring, int max_degree, bool with_chains = true, bool with_cochains = true)
      : cx_(std::move(M), ring), max_degree_(max_degree) {
    if (!ring.is_field()) fail(ErrorCode::RingMismatch, "class comparison needs a field");
    for (int n = 0; n <= max_degree; ++n) {
      if (with_chains)
        chains_.push_back(std::make_unique<HomologyClasses>(cx_.chain_differential_matrix(n + 1),
                                                            cx_.chain_differential_matrix(n), n));
      if (with_cochains) {
        const ExactMatrix incoming =
            n == 0 ? ExactMatrix(ring, cx_.cochain_dim(0), 0) : cx_.cochain_differential_matrix(n - 1);
        cochains_.push_back(std::make_unique<HomologyClasses>(incoming, cx_.cochain_differential_matrix(n), n));
      }
    }
  }

  const FiniteHochschildComplex& complex() const { return cx_; }
  const Ring& ring() const { return cx_.ring(); }
  const BimodulePtr& module() const { return cx_.module(); }
  int max_degree() const { return max_degree_; }

  const HomologyClasses& homology(int n) const { return *chains_.at(static_cast<std::size_t>(n)); }
  const HomologyClasses& cohomology(int p) const { return *cochains_.at(static_cast<std::size_t>(p)); }

  HochschildChain chain_representative(int n, std::size_t i) const {
    return cx_.vector_to_chain(homology(n).representative(i), n);
  }
  HochschildCochain cochain_representative(int p, std::size_t i) const {
    return cx_.vector_to_cochain(cohomology(p).representative(i), p);
  }

  // Coordinates of a homogeneous cycle (or zero chain) of degree n; empty outside range.
  std::vector<Scalar> chain_coordinates(const HochschildChain& c, int n) const {
    if (n < 0 || n > max_degree_ || chains_.empty()) {
      if (n >= 0 && n <= max_degree_) fail(ErrorCode::InvalidSpec, "chains not computed");
      return {};
    }
    return homology(n).coordinates(cx_.chain_to_vector(c, n));
  }
  std::vector<Scalar> cochain_coordinates(const HochschildCochain& f) const {
    if (f.arity() < 0 || f.arity() > max_degree_) return {};
    return cohomology(f.arity()).coordinates(cx_.cochain_to_vector(f));
  }

  bool chain_is_boundary(const HochschildChain& c, int n) const {
    for (const auto& x : chain_coordinates(c, n))
      if (!x.is_zero()) return false;
    return true;
  }
  bool cochain_is_coboundary(const HochschildCochain& f) const {
    for (const auto& x : cochain_coordinates(f))
      if (!x.is_zero()) return false;
    return true;
  }

  // Replaces an evaluator chain by its table on the normalized basis.
  HochschildCochain materialize(const HochschildCochain& f) const {
    if (f.arity() < 0) return f;
    return cx_.vector_to_cochain(cx_.cochain_to_vector(f), f.arity());
  }

 private:
  FiniteHochschildComplex cx_;
  int max_degree_;
  std::vector<std::unique_ptr<HomologyClasses>> chains_;
  std::vector<std::unique_ptr<HomologyClasses>> cochains_;
};

}  // namespace hochbv
