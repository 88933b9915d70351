#include <gtest/gtest.h>

#include <random>

#include "hochbv/hom_tensor.hpp"

using namespace hochbv;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

ExactMatrix random_matrix(std::mt19937& rng, Ring ring, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  ExactMatrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.add(r, c, Scalar(ring, dist(rng)));
  return m;
}

void expect_smith_postconditions(const ExactMatrix& M) {
  const SmithResult s = smith_normal_form(M);
  EXPECT_EQ(s.U * M * s.V, s.D);
  EXPECT_EQ(s.U * s.U_inverse, ExactMatrix::identity(Z, M.rows()));
  // V unimodular: its SNF is the identity
  const SmithResult sv = smith_normal_form(s.V);
  for (const auto& d : sv.diagonal) EXPECT_EQ(d, 1);
  EXPECT_EQ(sv.diagonal.size(), M.cols());
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_TRUE(s.D.at(i, j).is_zero());
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    EXPECT_GT(s.diagonal[i], 0);
    EXPECT_TRUE(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()));
  }
}

// dim of ker/im over F_p by enumerating all vectors (ranks <= 4).
std::size_t brute_force_dimension(const ExactMatrix& d_in, const ExactMatrix& d_out, std::int64_t p) {
  const std::size_t n = d_out.cols();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
  const Ring F = d_out.ring();
  auto vec = [&](std::size_t code, std::size_t len) {
    SparseVector v(F);
    for (std::size_t i = 0; i < len; ++i) {
      v.add(i, Scalar(F, static_cast<long long>(code % p)));
      code /= p;
    }
    return v;
  };
  std::size_t ker = 0;
  for (std::size_t code = 0; code < total; ++code)
    if (d_out.apply(vec(code, n)).is_zero()) ++ker;
  std::set<std::vector<std::string>> image;
  std::size_t sources = 1;
  for (std::size_t i = 0; i < d_in.cols(); ++i) sources *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < sources; ++code) {
    const SparseVector w = d_in.apply(vec(code, d_in.cols()));
    std::vector<std::string> key(n, "0");
    for (const auto& [i, c] : w) key[i] = c.to_string();
    image.insert(key);
  }
  std::size_t quotient = ker / image.size(), dim = 0;
  while (quotient > 1) {
    quotient /= static_cast<std::size_t>(p);
    ++dim;
  }
  return dim;
}

}  // namespace

TEST(Scalar, PrimeFieldValuesAreReduced) {
  const Ring F5 = Ring::prime_field(5);
  EXPECT_EQ(Scalar(F5, -1).to_string(), "4");
  EXPECT_EQ((Scalar(F5, 3) * Scalar(F5, 4)).to_string(), "2");
  EXPECT_EQ(Scalar(F5, 3).inverse().to_string(), "2");
  EXPECT_EQ(Scalar(F5, mpq_class(1, 2)).to_string(), "3");
  EXPECT_TRUE((Scalar(F5, 2) + Scalar(F5, 3)).is_zero());
}

TEST(Scalar, IntegerDivisionIsExact) {
  EXPECT_EQ((Scalar(Z, 12) / Scalar(Z, 4)).to_string(), "3");
  EXPECT_THROW(Scalar(Z, 3) / Scalar(Z, 2), Error);
  EXPECT_THROW(Scalar(Z, 2).inverse(), Error);
  EXPECT_EQ((Scalar(Q, 3) / Scalar(Q, 2)).to_string(), "3/2");
}

TEST(Scalar, RingMismatchIsReported) {
  try {
    (void)(Scalar(Z, 1) + Scalar(Q, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
}

TEST(Scalar, RingParsing) {
  EXPECT_EQ(Ring::parse("z"), Z);
  EXPECT_EQ(Ring::parse("q"), Q);
  EXPECT_EQ(Ring::parse("f7").modulus(), 7);
  EXPECT_THROW(Ring::parse("f4"), Error);
  EXPECT_THROW(Ring::parse("r"), Error);
}

TEST(SmithNormalForm, Identity) {
  const auto I = ExactMatrix::identity(Z, 2);
  const SmithResult s = smith_normal_form(I);
  EXPECT_EQ(s.D, I);
  EXPECT_EQ(s.U, I);
  EXPECT_EQ(s.V, I);
}

TEST(SmithNormalForm, ZeroMatrix) {
  const ExactMatrix zero(Z, 2, 3);
  const SmithResult s = smith_normal_form(zero);
  EXPECT_TRUE(s.D.is_zero());
  EXPECT_EQ(s.U, ExactMatrix::identity(Z, 2));
  EXPECT_EQ(s.V, ExactMatrix::identity(Z, 3));
}

TEST(SmithNormalForm, InvariantFactorsOfTwoByTwo) {
  const auto M = ExactMatrix::from_rows(Z, {{2, 4}, {6, 8}});
  const SmithResult s = smith_normal_form(M);
  ASSERT_EQ(s.diagonal.size(), 2u);
  EXPECT_EQ(s.diagonal[0], 2);
  EXPECT_EQ(s.diagonal[1], 4);
  expect_smith_postconditions(M);
}

TEST(SmithNormalForm, RandomizedPostconditions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    expect_smith_postconditions(random_matrix(rng, Z, rows, cols, 6));
  }
}

TEST(HomologyAt, CokernelOfMultiplicationByTwo) {
  const auto d_in = ExactMatrix::from_rows(Z, {{2}});
  const ExactMatrix d_out(Z, 0, 1);
  const auto h = homology_at(d_in, d_out, Z);
  EXPECT_EQ(h.free_rank, 0u);
  ASSERT_EQ(h.torsion.size(), 1u);
  EXPECT_EQ(h.torsion[0], 2);
  ASSERT_EQ(h.representatives.size(), 1u);
}

TEST(HomologyAt, ZeroDifferentials) {
  const auto h = homology_at(ExactMatrix(Z, 3, 0), ExactMatrix(Z, 0, 3), Z);
  EXPECT_EQ(h.free_rank, 3u);
  EXPECT_TRUE(h.torsion.empty());
  const Ring F2 = Ring::prime_field(2);
  const auto hf = homology_at(ExactMatrix(F2, 2, 2), ExactMatrix(F2, 2, 2), F2);
  EXPECT_EQ(hf.free_rank, 2u);
  EXPECT_TRUE(hf.torsion.empty());
}

TEST(HomologyAt, CompositionNotZero) {
  const auto a = ExactMatrix::from_rows(Z, {{1}});
  try {
    homology_at(a, a, Z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CompositionNotZero);
  }
}

TEST(HomologyAt, UniversalCoefficientsOnRandomComplexes) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    // C2 -> C1 -> C0 with d2 = K R, K a Z-basis of ker d1.
    const std::size_t n0 = 1 + rng() % 3, n1 = 1 + rng() % 4, n2 = 1 + rng() % 3;
    ExactMatrix d1 = random_matrix(rng, Z, n0, n1, 2);
    if (trial % 3 == 0) d1 = ExactMatrix(Z, n0, n1);
    const auto ker = kernel_basis(d1);
    ExactMatrix K(Z, n1, ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j) K.set_column(j, ker[j]);
    ExactMatrix R = random_matrix(rng, Z, ker.size(), n2, 3);
    const ExactMatrix d2 = K * R;
    const ExactMatrix d0(Z, 0, n0);
    const ExactMatrix d3(Z, n2, 0);

    const auto h0 = homology_at(d1, d0, Z);
    const auto h1 = homology_at(d2, d1, Z);
    const auto h2 = homology_at(d3, d2, Z);
    for (const auto* h : {&h0, &h1, &h2})
      for (const auto& rep : h->representatives) EXPECT_FALSE(rep.is_zero());
    for (const auto& rep : h1.representatives) EXPECT_TRUE(d1.apply(rep).is_zero());
    for (const auto& rep : h2.representatives) EXPECT_TRUE(d2.apply(rep).is_zero());

    for (std::int64_t p : {2, 3}) {
      const Ring F = Ring::prime_field(p);
      auto count = [p](const HomologyPresentation& h) {
        std::size_t c = 0;
        for (const auto& t : h.torsion)
          if (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) ++c;
        return c;
      };
      const std::size_t predicted1 = h1.free_rank + count(h1) + count(h0);
      const std::size_t predicted2 = h2.free_rank + count(h2) + count(h1);
      const auto f1 = homology_at(d2.to_ring(F), d1.to_ring(F), F);
      const auto f2 = homology_at(d3.to_ring(F), d2.to_ring(F), F);
      EXPECT_EQ(f1.free_rank, predicted1);
      EXPECT_EQ(f2.free_rank, predicted2);
      EXPECT_EQ(f1.free_rank, brute_force_dimension(d2.to_ring(F), d1.to_ring(F), p));
    }
  }
}

TEST(HomologyClasses, CoordinatesOfBoundariesVanish) {
  const Ring F3 = Ring::prime_field(3);
  // C1 = F3^2 -> C0 = F3, d = (1 1); C2 = F3 -> C1, d = (1, -1)^T
  const auto d1 = ExactMatrix::from_rows(F3, {{1, 1}});
  const auto d2 = ExactMatrix::from_rows(F3, {{1}, {-1}});
  const HomologyClasses classes(d2, d1, 1);
  EXPECT_EQ(classes.dimension(), 0u);
  SparseVector b(F3);
  b.add(0, 2);
  b.add(1, 1);
  EXPECT_TRUE(classes.is_boundary(b));
}

TEST(HomTensor, OneDimensionalB) {
  const Ring F = Ring::prime_field(5);
  FiniteComplex B{F, 0, {1}, {ExactMatrix(F, 0, 1)}};
  FiniteComplex N{F, 0, {2, 3}, {ExactMatrix(F, 0, 2), ExactMatrix(F, 2, 3)}};
  const auto t = hom_tensor_comparison(B, N);
  EXPECT_TRUE(t.is_isomorphism);
  for (int k = 0; k <= 1; ++k) EXPECT_EQ(t.map_at(k), ExactMatrix::identity(F, N.dim(k)));
}

TEST(HomTensor, TwoDimensionalBIntoK) {
  FiniteComplex B{Q, 0, {2}, {ExactMatrix(Q, 0, 2)}};
  FiniteComplex N{Q, 0, {1}, {ExactMatrix(Q, 0, 1)}};
  const auto t = hom_tensor_comparison(B, N);
  EXPECT_TRUE(t.is_isomorphism);
  EXPECT_EQ(t.source.dim(0), 2u);
  EXPECT_EQ(t.target.dim(0), 2u);
}

TEST(HomTensor, MultiplicationByTwoAgainstZModTwo) {
  // B: Z --2--> Z in degrees 1,0; N = Z/2 via its free resolution in degrees 1,0.
  FiniteComplex B{Z, 0, {1, 1}, {ExactMatrix(Z, 0, 1), ExactMatrix::from_rows(Z, {{2}})}};
  FiniteComplex N = B;
  const auto t = hom_tensor_comparison(B, N);
  EXPECT_TRUE(t.is_isomorphism);
  for (int k = t.min_degree; k <= t.source.max_degree(); ++k) {
    EXPECT_EQ(t.map_at(k - 1) * t.source.differential(k), t.target.differential(k) * t.map_at(k));
    const auto hs = t.source.homology(k);
    const auto ht = t.target.homology(k);
    EXPECT_EQ(hs.free_rank, ht.free_rank);
    EXPECT_EQ(hs.torsion, ht.torsion);
    for (const auto& rep : hs.representatives) {
      const SparseVector image = t.map_at(k).apply(rep);
      EXPECT_TRUE(t.target.differential(k).apply(image).is_zero());
      EXPECT_FALSE(is_boundary(t.target.differential(k + 1), image));
    }
  }
  // Direct computation of H(Hom(B, N)) = RHom(Z/2, Z/2): Z/2 in degrees 0 and -1.
  EXPECT_EQ(t.target.homology(1).torsion.size(), 0u);
  EXPECT_EQ(t.target.homology(1).free_rank, 0u);
  EXPECT_EQ(t.target.homology(0).torsion, std::vector<mpz_class>{2});
  EXPECT_EQ(t.target.homology(-1).torsion, std::vector<mpz_class>{2});
}

TEST(HomTensor, ChainMapOnRandomComplexes) {
  std::mt19937 rng(3);
  const Ring F = Ring::prime_field(7);
  auto random_complex = [&](int min_degree) {
    FiniteComplex c{F, min_degree, {}, {}};
    const std::size_t len = 2 + rng() % 2;
    for (std::size_t i = 0; i < len; ++i) c.dims.push_back(1 + rng() % 3);
    c.diffs.push_back(ExactMatrix(F, 0, c.dims[0]));
    for (std::size_t i = 1; i < len; ++i) {
      // d_i = (random) composed with a projection onto ker d_{i-1}
      const auto ker = kernel_basis(c.diffs[i - 1]);
      ExactMatrix K(F, c.dims[i - 1], ker.size());
      for (std::size_t j = 0; j < ker.size(); ++j) K.set_column(j, ker[j]);
      c.diffs.push_back(K * random_matrix(rng, F, ker.size(), c.dims[i], 3));
    }
    return c;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto B = random_complex(static_cast<int>(rng() % 3) - 1);
    const auto N = random_complex(static_cast<int>(rng() % 3) - 1);
    const auto t = hom_tensor_comparison(B, N);
    for (int k = t.min_degree + 1; k <= t.source.max_degree(); ++k) {
      EXPECT_TRUE((t.source.differential(k - 1) * t.source.differential(k)).is_zero());
      EXPECT_TRUE((t.target.differential(k - 1) * t.target.differential(k)).is_zero());
      EXPECT_EQ(t.map_at(k - 1) * t.source.differential(k), t.target.differential(k) * t.map_at(k));
    }
  }
}

TEST(HomTensor, UnboundedComplexRejected) {
  FiniteComplex B{Q, 0, {1}, {ExactMatrix(Q, 0, 1)}};
  B.bounded = false;
  try {
    hom_tensor_comparison(B, B);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundedComplex);
  }
}
