#pragma once

#include <optional>
#include <vector>

#include "hochbv/matrix.hpp"

namespace hochbv {

struct HomologyPresentation {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;             // entries >= 2, each dividing the next
  std::vector<SparseVector> representatives;  // free generators first, then torsion generators
};

namespace detail {

inline void check_composable(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) fail(ErrorCode::CompositionNotZero, "shape mismatch between differentials");
  if (!(d_out * d_in).is_zero()) fail(ErrorCode::CompositionNotZero, "d_out * d_in != 0");
}

inline HomologyPresentation homology_over_field(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  HomologyPresentation h;
  FieldEchelon echelon(d_in.ring());
  for (std::size_t c = 0; c < d_in.cols(); ++c) echelon.insert(d_in.column(c));
  for (auto& k : kernel_basis(d_out)) {
    if (!echelon.insert(k)) h.representatives.push_back(std::move(k));
  }
  h.free_rank = h.representatives.size();
  return h;
}

inline HomologyPresentation homology_over_integers(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  const Ring z = Ring::integers();
  HomologyPresentation h;
  const std::size_t m = d_in.rows();
  const std::vector<SparseVector> ker = kernel_basis(d_out);
  const SmithResult s = smith_normal_form(d_in);
  const std::size_t r = s.diagonal.size();

  // Free part: kernel vectors in U-coordinates with the image directions removed.
  ExactMatrix projected(z, m, ker.size());
  for (std::size_t j = 0; j < ker.size(); ++j) {
    SparseVector y = s.U.apply(ker[j]);
    for (const auto& [row, v] : y)
      if (row >= r) projected.add(row, j, v);
  }
  const SmithResult p = smith_normal_form(projected);
  for (std::size_t j = 0; j < p.diagonal.size(); ++j) {
    SparseVector basis_vec = projected.apply(p.V.column(j));
    h.representatives.push_back(s.U_inverse.apply(basis_vec));
  }
  h.free_rank = p.diagonal.size();

  for (std::size_t i = 0; i < r; ++i) {
    if (s.diagonal[i] > 1) {
      h.torsion.push_back(s.diagonal[i]);
      h.representatives.push_back(s.U_inverse.column(i));
    }
  }
  return h;
}

}  // namespace detail

// ker(d_out) / im(d_in). d_in: C_{n+1} -> C_n, d_out: C_n -> C_{n-1}.
inline HomologyPresentation homology_at(const ExactMatrix& d_in, const ExactMatrix& d_out, Ring ring, int degree = 0) {
  if (!(d_in.ring() == ring) || !(d_out.ring() == ring)) fail(ErrorCode::RingMismatch, "differentials over another ring");
  detail::check_composable(d_in, d_out);
  HomologyPresentation h = ring.is_field() ? detail::homology_over_field(d_in, d_out)
                                           : detail::homology_over_integers(d_in, d_out);
  h.degree = degree;
  return h;
}

// Homology classes of one degree over a field: decides boundary membership and
// returns coordinates of cycles on the chosen representatives.
class HomologyClasses {
 public:
  HomologyClasses(const ExactMatrix& d_in, const ExactMatrix& d_out, int degree = 0)
      : ring_(d_in.ring()), d_out_(d_out), echelon_(d_in.ring()) {
    presentation_ = homology_at(d_in, d_out, ring_, degree);
    image_count_ = d_in.cols();
    for (std::size_t c = 0; c < d_in.cols(); ++c) echelon_.insert(d_in.column(c));
    for (const auto& rep : presentation_.representatives) echelon_.insert(rep);
  }

  const HomologyPresentation& presentation() const { return presentation_; }
  std::size_t dimension() const { return presentation_.free_rank; }
  const SparseVector& representative(std::size_t i) const { return presentation_.representatives.at(i); }

  bool is_cycle(const SparseVector& v) const { return d_out_.apply(v).is_zero(); }

  std::vector<Scalar> coordinates(const SparseVector& v) const {
    if (!is_cycle(v)) fail(ErrorCode::NotACycle, "vector is not a cycle");
    const auto red = echelon_.reduce(v);
    if (!red.residual.is_zero()) fail(ErrorCode::LinearSolveFailed, "cycle outside span of image and representatives");
    std::vector<Scalar> out(dimension(), Scalar::zero(ring_));
    for (const auto& [idx, c] : red.combination)
      if (idx >= image_count_) out[idx - image_count_] = c;
    return out;
  }

  bool is_boundary(const SparseVector& v) const {
    for (const auto& c : coordinates(v))
      if (!c.is_zero()) return false;
    return true;
  }

  SparseVector from_coordinates(const std::vector<Scalar>& coords) const {
    SparseVector out(ring_);
    for (std::size_t i = 0; i < coords.size(); ++i) out.add_scaled(representative(i), coords[i]);
    return out;
  }

 private:
  Ring ring_;
  ExactMatrix d_out_;
  FieldEchelon echelon_;
  HomologyPresentation presentation_;
  std::size_t image_count_ = 0;
};

// Boundary membership over any ring (SNF over Z).
inline bool is_boundary(const ExactMatrix& d_in, const SparseVector& v) { return solve(d_in, v).has_value(); }

}  // namespace hochbv
