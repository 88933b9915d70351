#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "hochbv/homology.hpp"

namespace hochbv {

// Bounded complex of finite free modules, lower grading. differential(n): C_n -> C_{n-1}.
struct FiniteComplex {
  Ring ring = Ring::rationals();
  int min_degree = 0;
  std::vector<std::size_t> dims;       // dims[i] = rank of C_{min_degree + i}
  std::vector<ExactMatrix> diffs;      // diffs[i]: C_{min_degree+i} -> C_{min_degree+i-1}
  bool bounded = true;

  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int n) const {
    if (n < min_degree || n > max_degree()) return 0;
    return dims[static_cast<std::size_t>(n - min_degree)];
  }
  ExactMatrix differential(int n) const {
    if (n < min_degree || n > max_degree()) return ExactMatrix(ring, dim(n - 1), dim(n));
    return diffs[static_cast<std::size_t>(n - min_degree)];
  }
  HomologyPresentation homology(int n) const {
    return homology_at(differential(n + 1), differential(n), ring, n);
  }
};

// Theta: B^v (x) N -> Hom(B, N), phi (x) n |-> (-1)^{|phi||n|} [b |-> phi(b) n].
// Both total complexes share the index set (p, i, q, j) with q - p = total degree,
// where i runs over a basis of B_p and j over a basis of N_q.
struct HomTensorComparison {
  FiniteComplex source;  // B^v (x) N
  FiniteComplex target;  // Hom(B, N)
  std::vector<ExactMatrix> theta;  // theta[k - min_degree] in total degree k
  bool is_isomorphism = false;
  int min_degree = 0;

  ExactMatrix map_at(int k) const {
    if (k < min_degree || k >= min_degree + static_cast<int>(theta.size())) return ExactMatrix(source.ring, 0, 0);
    return theta[static_cast<std::size_t>(k - min_degree)];
  }
};

inline HomTensorComparison hom_tensor_comparison(const FiniteComplex& B, const FiniteComplex& N) {
  if (!B.bounded || !N.bounded) fail(ErrorCode::UnboundedComplex, "hom-tensor comparison needs bounded complexes");
  if (!(B.ring == N.ring)) fail(ErrorCode::RingMismatch, "complexes over different rings");
  const Ring ring = B.ring;
  using Index = std::tuple<int, std::size_t, int, std::size_t>;  // (p, i, q, j)

  const int lo = N.min_degree - B.max_degree();
  const int hi = N.max_degree() - B.min_degree;
  std::map<int, std::vector<Index>> basis;
  std::map<Index, std::size_t> position;
  for (int k = lo; k <= hi; ++k) {
    auto& list = basis[k];
    for (int p = B.min_degree; p <= B.max_degree(); ++p) {
      const int q = p + k;
      for (std::size_t i = 0; i < B.dim(p); ++i)
        for (std::size_t j = 0; j < N.dim(q); ++j) {
          position[Index{p, i, q, j}] = list.size();
          list.emplace_back(p, i, q, j);
        }
    }
  }

  HomTensorComparison out;
  out.min_degree = lo;
  for (FiniteComplex* c : {&out.source, &out.target}) {
    c->ring = ring;
    c->min_degree = lo;
    for (int k = lo; k <= hi; ++k) c->dims.push_back(basis[k].size());
  }

  for (int k = lo; k <= hi; ++k) {
    const auto& dom = basis[k];
    const std::size_t rows = k - 1 >= lo ? basis[k - 1].size() : 0;
    ExactMatrix dt(ring, rows, dom.size()), dh(ring, rows, dom.size());
    for (std::size_t col = 0; col < dom.size(); ++col) {
      const auto [p, i, q, j] = dom[col];
      // D(phi_i (x) n_j) = D(phi_i) (x) n_j + (-1)^{|phi|} phi_i (x) d n_j, with
      // D(phi) = -(-1)^{|phi|} phi o d_B landing on B_{p+1}; |phi| = -p.
      if (k - 1 >= lo) {
        const ExactMatrix dB = B.differential(p + 1);  // B_{p+1} -> B_p
        for (std::size_t i2 = 0; i2 < B.dim(p + 1); ++i2) {
          const Scalar c = dB.at(i, i2);
          if (c.is_zero()) continue;
          dt.add(position.at(Index{p + 1, i2, q, j}), col, -sign_scalar(ring, p) * c);
        }
        const ExactMatrix dN = N.differential(q);
        for (const auto& [j2, c] : dN.column(j))
          dt.add(position.at(Index{p, i, q - 1, j2}), col, sign_scalar(ring, p) * c);
        // Hom side: D f = d_N f - (-1)^{|f|} f d_B, f = E_{j,i}: B_p -> N_q.
        for (const auto& [j2, c] : dN.column(j)) dh.add(position.at(Index{p, i, q - 1, j2}), col, c);
        for (std::size_t i2 = 0; i2 < B.dim(p + 1); ++i2) {
          const Scalar c = dB.at(i, i2);
          if (c.is_zero()) continue;
          dh.add(position.at(Index{p + 1, i2, q, j}), col, -sign_scalar(ring, k) * c);
        }
      }
    }
    out.source.diffs.push_back(std::move(dt));
    out.target.diffs.push_back(std::move(dh));

    ExactMatrix th(ring, dom.size(), dom.size());
    for (std::size_t col = 0; col < dom.size(); ++col) {
      const auto [p, i, q, j] = dom[col];
      th.add(col, col, sign_scalar(ring, p * q));
    }
    out.theta.push_back(std::move(th));
  }
  // Theta is a signed permutation matrix in every degree under the finiteness hypotheses.
  out.is_isomorphism = true;
  for (const auto& th : out.theta)
    if (matrix_rank(th) != th.cols() || th.rows() != th.cols()) out.is_isomorphism = false;
  return out;
}

}  // namespace hochbv
