#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hochbv/linear_combination.hpp"

namespace hochbv {

using SparseVector = LinearCombination<std::size_t>;

// Column-sparse matrix; no stored zeros.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), columns_(cols, SparseVector(ring)) {}

  static ExactMatrix identity(Ring ring, std::size_t n) {
    ExactMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.add(i, i, Scalar::one(ring));
    return m;
  }
  static ExactMatrix from_rows(Ring ring, const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(ring, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m.add(r, c, Scalar(ring, rows[r][c]));
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  void add(std::size_t r, std::size_t c, const Scalar& v) { columns_.at(c).add(r, v); }
  void set(std::size_t r, std::size_t c, const Scalar& v) {
    columns_.at(c).add(r, v - at(r, c));
  }
  Scalar at(std::size_t r, std::size_t c) const { return columns_.at(c).coefficient(r); }

  const SparseVector& column(std::size_t c) const { return columns_.at(c); }
  void set_column(std::size_t c, SparseVector v) { columns_.at(c) = std::move(v); }

  SparseVector apply(const SparseVector& x) const {
    SparseVector out(ring_);
    for (const auto& [c, v] : x) out.add_scaled(columns_.at(c), v);
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::InvalidSpec, "matrix shape mismatch");
    ExactMatrix out(a.ring_, a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) out.columns_[c] = a.apply(b.columns_[c]);
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(ring_, cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) t.add(c, r, v);
    return t;
  }

  ExactMatrix to_ring(Ring target) const {
    ExactMatrix out(target, rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) out.add(r, c, v.to_ring(target));
    return out;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& v) { return v.is_zero(); });
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) out.emplace_back(r, c, v);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

// Incremental column echelon form over a field. Vectors are inserted in order and
// numbered 0, 1, ...; each stored reduced vector remembers its expression in the
// inserted originals. Pivot = largest row index.
class FieldEchelon {
 public:
  struct Reduction {
    SparseVector residual;     // v minus the combination below
    SparseVector combination;  // coefficients on inserted originals
  };

  explicit FieldEchelon(Ring ring) : ring_(ring) {
    if (!ring.is_field()) fail(ErrorCode::RingMismatch, "FieldEchelon requires a field");
  }

  Reduction reduce(const SparseVector& v) const {
    Reduction out{v, SparseVector(ring_)};
    while (!out.residual.is_zero()) {
      const auto [row, value] = *out.residual.terms().rbegin();
      auto it = pivot_.find(row);
      if (it == pivot_.end()) break;
      const Entry& e = reduced_[it->second];
      const Scalar factor = value / e.vec.coefficient(row);
      out.residual.add_scaled(e.vec, -factor);
      out.combination.add_scaled(e.expr, factor);
    }
    return out;
  }

  // Returns the dependency combination if v lies in the current span, otherwise
  // records v as a new independent direction.
  std::optional<SparseVector> insert(const SparseVector& v) {
    Reduction red = reduce(v);
    const std::size_t index = count_++;
    if (red.residual.is_zero()) return red.combination;
    Entry e{std::move(red.residual), SparseVector(ring_)};
    e.expr = -red.combination;
    e.expr.add(index, Scalar::one(ring_));
    pivot_.emplace(e.vec.terms().rbegin()->first, reduced_.size());
    reduced_.push_back(std::move(e));
    return std::nullopt;
  }

  bool in_span(const SparseVector& v) const { return reduce(v).residual.is_zero(); }
  std::size_t rank() const { return reduced_.size(); }
  std::size_t count() const { return count_; }

 private:
  struct Entry {
    SparseVector vec;
    SparseVector expr;
  };
  Ring ring_;
  std::vector<Entry> reduced_;
  std::map<std::size_t, std::size_t> pivot_;
  std::size_t count_ = 0;
};

struct SmithResult {
  ExactMatrix D, U, V;
  ExactMatrix U_inverse;
  std::vector<mpz_class> diagonal;  // nonzero invariant factors d1 | d2 | ...
};

namespace detail {

using DenseZ = std::vector<std::vector<mpz_class>>;

inline DenseZ to_dense(const ExactMatrix& m) {
  DenseZ d(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) d[r][c] = v.to_integer();
  return d;
}

inline ExactMatrix from_dense(const DenseZ& d, std::size_t rows, std::size_t cols) {
  const Ring z = Ring::integers();
  ExactMatrix m(z, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (d[r][c] != 0) m.add(r, c, Scalar(z, mpq_class(d[r][c])));
  return m;
}

inline DenseZ dense_identity(std::size_t n) {
  DenseZ d(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

}  // namespace detail

// Smith normal form over Z by gcd-style integer row/column operations.
inline SmithResult smith_normal_form(const ExactMatrix& M) {
  using detail::DenseZ;
  const std::size_t m = M.rows(), n = M.cols();
  DenseZ D = detail::to_dense(M);
  DenseZ U = detail::dense_identity(m), Ui = detail::dense_identity(m), V = detail::dense_identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    std::swap(U[i], U[j]);
    for (auto& row : Ui) std::swap(row[i], row[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : D) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  };
  // row_i -= q * row_t
  auto row_op = [&](std::size_t i, std::size_t t, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) D[i][c] -= q * D[t][c];
    for (std::size_t c = 0; c < m; ++c) U[i][c] -= q * U[t][c];
    for (std::size_t r = 0; r < m; ++r) Ui[r][t] += q * Ui[r][i];
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) D[r][j] -= q * D[r][t];
    for (std::size_t r = 0; r < n; ++r) V[r][j] -= q * V[r][t];
  };

  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D[i][j] != 0 && (!found || abs(D[i][j]) < abs(D[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        row_op(i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        col_op(j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D[i][t] != 0 && abs(D[i][t]) < abs(D[bi][bj])) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[t][j] != 0 && abs(D[t][j]) < abs(D[bi][bj])) { bi = t; bj = j; }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] != 0 && !mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
            row_op(t, i, mpz_class(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) D[t][c] = -D[t][c];
      for (std::size_t c = 0; c < m; ++c) U[t][c] = -U[t][c];
      for (std::size_t r = 0; r < m; ++r) Ui[r][t] = -Ui[r][t];
    }
    diag.push_back(D[t][t]);
  }
  return SmithResult{detail::from_dense(D, m, n), detail::from_dense(U, m, m), detail::from_dense(V, n, n),
                     detail::from_dense(Ui, m, m), std::move(diag)};
}

// Rank over a field, or over Z (rank of the rational span).
inline std::size_t matrix_rank(const ExactMatrix& M) {
  if (M.ring().is_field()) {
    FieldEchelon e(M.ring());
    for (std::size_t c = 0; c < M.cols(); ++c) e.insert(M.column(c));
    return e.rank();
  }
  return matrix_rank(M.to_ring(Ring::rationals()));
}

// Basis of ker(M): over a field from column dependencies, over Z from the SNF column transform.
inline std::vector<SparseVector> kernel_basis(const ExactMatrix& M) {
  std::vector<SparseVector> out;
  if (M.ring().is_field()) {
    FieldEchelon e(M.ring());
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (auto dep = e.insert(M.column(c))) {
        SparseVector k = -*dep;
        k.add(c, Scalar::one(M.ring()));
        out.push_back(std::move(k));
      }
    }
    return out;
  }
  const SmithResult s = smith_normal_form(M);
  for (std::size_t c = s.diagonal.size(); c < M.cols(); ++c) out.push_back(s.V.column(c));
  return out;
}

// Some x with M x = b, or nullopt.
inline std::optional<SparseVector> solve(const ExactMatrix& M, const SparseVector& b) {
  const Ring ring = M.ring();
  if (ring.is_field()) {
    FieldEchelon e(ring);
    for (std::size_t c = 0; c < M.cols(); ++c) e.insert(M.column(c));
    auto red = e.reduce(b);
    if (!red.residual.is_zero()) return std::nullopt;
    return red.combination;
  }
  // U M V = D: solve D y = U b, x = V y.
  const SmithResult s = smith_normal_form(M);
  const SparseVector ub = s.U.apply(b);
  SparseVector y(ring);
  for (const auto& [r, v] : ub) {
    if (r >= s.diagonal.size()) return std::nullopt;
    const Scalar d(ring, mpq_class(s.diagonal[r]));
    if (!d.divides(v)) return std::nullopt;
    y.add(r, v / d);
  }
  return s.V.apply(y);
}

}  // namespace hochbv
