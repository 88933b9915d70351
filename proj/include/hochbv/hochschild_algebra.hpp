#pragma once

#include <string>
#include <vector>

#include "hochbv/bv_axioms.hpp"
#include "hochbv/finite_classes.hpp"
#include "hochbv/structure_ops.hpp"

namespace hochbv {

namespace detail {

inline Vec to_dense(const std::vector<Scalar>& coords, std::size_t offset, std::size_t total, const Ring& ring) {
  Vec v = vzero(ring, total);
  for (std::size_t i = 0; i < coords.size(); ++i) v[offset + i] = coords[i];
  return v;
}

}  // namespace detail

// HH^{<= max_degree}(k[G], k[G]) as a graded spec (class of degree p has lower degree -p), with
// cup and bracket computed on cocycle representatives and components above max_degree dropped.
// Axiom checks skip instances that pass through the dropped degrees.
// The unit class replaces one basis vector of HH^0.
inline GradedAlgebraSpec hochschild_cohomology_spec(const GroupPtr& G, Ring ring, int max_degree) {
  const BimodulePtr A = Bimodule::regular(G);
  const FiniteHH hh(A, ring, max_degree, false, true);
  std::vector<std::size_t> offset;
  std::vector<HochschildCochain> reps;
  GradedAlgebraSpec s;
  s.name = "HH*(" + G->name() + ")";
  s.ring = ring;
  for (int p = 0; p <= max_degree; ++p) {
    offset.push_back(reps.size());
    for (std::size_t i = 0; i < hh.cohomology(p).dimension(); ++i) {
      reps.push_back(hh.cochain_representative(p, i));
      s.names.push_back("h" + std::to_string(p) + "_" + std::to_string(i));
      s.degrees.push_back(-p);
    }
  }
  const std::size_t n = reps.size();
  auto coords = [&](const HochschildCochain& f) {
    if (f.arity() < 0 || f.arity() > max_degree) return detail::vzero(ring, n);
    return detail::to_dense(hh.cochain_coordinates(f), offset[static_cast<std::size_t>(f.arity())], n, ring);
  };
  // change of basis putting the unit class at the first index k with a nonzero coordinate
  const Vec u = coords(HochschildCochain::unit(A, ring));
  std::size_t k = 0;
  while (k < n && u[k].is_zero()) ++k;
  if (k == n) fail(ErrorCode::InvalidSpec, "unit class not found");
  const Scalar uk_inv = Scalar::one(ring) / u[k];
  auto rebase = [&](const Vec& v) {
    Vec w = v;
    w[k] = v[k] * uk_inv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) w[i] = v[i] - u[i] * w[k];
    return w;
  };
  reps[k] = HochschildCochain::unit(A, ring);
  s.names[k] = "1";
  s.unit = k;
  s.mult.assign(n, std::vector<Vec>(n));
  BilinearTable bracket(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.mult[i][j] = rebase(coords(cup(reps[i], reps[j])));
      bracket[i][j] = rebase(coords(gerstenhaber_bracket(reps[i], reps[j])));
    }
  s.bracket = bracket;
  s.lowest_degree = -max_degree;
  return s;
}

// HH_{<= max_degree}(k[G], k[G]) with Connes B (zero out of the top degree) and the operators i_a
// for the classes a of HH^p, p <= max_degree.
class HochschildEndomorphisms {
 public:
  HochschildEndomorphisms(const FiniteHH& hh, int max_degree) : hh_(hh), max_degree_(max_degree) {
    for (int n = 0; n <= max_degree; ++n) {
      offset_.push_back(chains_.size());
      for (std::size_t i = 0; i < hh.homology(n).dimension(); ++i) {
        chains_.push_back(hh.chain_representative(n, i));
        degrees_.push_back(n);
      }
    }
    B_.degree = 1;
    for (std::size_t j = 0; j < chains_.size(); ++j) B_.columns.push_back(coords(connes_B(chains_[j]), degrees_[j] + 1));
    for (int p = 0; p <= max_degree; ++p)
      for (std::size_t i = 0; i < hh.cohomology(p).dimension(); ++i) {
        cochains_.push_back(hh.cochain_representative(p, i));
        labels_.push_back("i(h" + std::to_string(p) + "_" + std::to_string(i) + ")");
        actions_.push_back(action(cochains_.back()));
      }
  }

  const std::vector<int>& degrees() const { return degrees_; }
  const Endo& B() const { return B_; }
  const std::vector<Endo>& actions() const { return actions_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<HochschildCochain>& cochains() const { return cochains_; }

  // Matrix of i_f on the chosen homology basis, f a cocycle.
  Endo action(const HochschildCochain& f) const {
    Endo e{-f.arity(), {}};
    for (std::size_t j = 0; j < chains_.size(); ++j) e.columns.push_back(coords(left_action(f, chains_[j]), degrees_[j] - f.arity()));
    return e;
  }

 private:
  Vec coords(const HochschildChain& c, int n) const {
    const std::size_t N = chains_.size();
    if (n < 0 || n > max_degree_) return detail::vzero(hh_.ring(), N);
    return detail::to_dense(hh_.chain_coordinates(c, n), offset_[static_cast<std::size_t>(n)], N, hh_.ring());
  }

  const FiniteHH& hh_;
  int max_degree_;
  std::vector<std::size_t> offset_;
  std::vector<int> degrees_;
  std::vector<HochschildChain> chains_;
  Endo B_;
  std::vector<Endo> actions_;
  std::vector<std::string> labels_;
  std::vector<HochschildCochain> cochains_;
};

}  // namespace hochbv
