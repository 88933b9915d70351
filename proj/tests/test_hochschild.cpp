#include <gtest/gtest.h>

#include <random>

#include "hochbv/hochschild.hpp"

using namespace hochbv;

namespace {

const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);

Word random_word(std::mt19937& rng, const Group& G, std::size_t n, bool allow_identity) {
  Word w;
  while (w.size() < n) {
    GroupElement g = G.element(rng() % G.order());
    if (!allow_identity && G.is_identity(g)) continue;
    w.push_back(g);
  }
  return w;
}

HochschildChain random_chain(std::mt19937& rng, const BimodulePtr& M, Ring ring, std::size_t n, bool allow_identity) {
  HochschildChain c(M, ring);
  const auto basis = M->basis();
  for (int i = 0; i < 4; ++i)
    c.add(BarWord{basis[rng() % basis.size()], random_word(rng, *M->group(), n, allow_identity)},
          Scalar(ring, static_cast<long long>(rng() % 5) - 2));
  return c;
}

}  // namespace

TEST(ChainDifferential, DegreeOneFormula) {
  const GroupPtr S3 = Group::symmetric3();
  const auto A = Bimodule::regular(S3);
  for (const auto& m : S3->elements())
    for (const auto& g : S3->elements()) {
      const auto c = HochschildChain::basis(A, Q, key_of(m), {g});
      HochschildChain expected(A, Q);
      expected.add(BarWord{key_of(S3->multiply(m, g)), {}}, Scalar::one(Q));
      expected.add(BarWord{key_of(S3->multiply(g, m)), {}}, Scalar(Q, -1));
      EXPECT_EQ(chain_differential(c), expected);
    }
}

TEST(ChainDifferential, LengthZeroIsCycle) {
  const GroupPtr S3 = Group::symmetric3();
  const auto A = Bimodule::regular(S3);
  EXPECT_TRUE(chain_differential(HochschildChain::basis(A, Q, key_of(S3->element(2)), {})).is_zero());
}

TEST(ChainDifferential, SquaresToZeroOnRandomS3Chains) {
  std::mt19937 rng(1);
  const GroupPtr S3 = Group::symmetric3();
  for (const auto& M : {Bimodule::regular(S3), Bimodule::trivial(S3), Bimodule::outer(S3)})
    for (int t = 0; t < 30; ++t) {
      const auto c = random_chain(rng, M, Q, 2 + t % 3, true);
      EXPECT_TRUE(chain_differential(chain_differential(c)).is_zero());
    }
}

TEST(ChainDifferential, SquaresToZeroOnZdWithBoundedExponents) {
  std::mt19937 rng(2);
  const GroupPtr G = Group::free_abelian(2);
  const auto A = Bimodule::regular(G);
  for (int t = 0; t < 30; ++t) {
    HochschildChain c(A, Q);
    Word w;
    for (int i = 0; i < 3; ++i)
      w.push_back(G->monomial({static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3}));
    c.add(BarWord{key_of(G->monomial({1, -2})), w}, Scalar(Q, 3));
    EXPECT_TRUE(chain_differential(chain_differential(c)).is_zero());
    EXPECT_TRUE(normalized_differential(normalized_differential(normalize(c))).is_zero());
  }
}

TEST(CochainDifferential, DegreeZeroSignSpecialization) {
  const GroupPtr S3 = Group::symmetric3();
  const auto A = Bimodule::regular(S3);
  const GroupElement x = S3->element(1);
  const auto f = HochschildCochain::constant(A, ModuleVector(Q, key_of(x)));
  const auto Df = cochain_differential(f);
  for (const auto& g : S3->non_identity_elements()) {
    ModuleVector expected(Q);
    expected.add(key_of(S3->multiply(g, x)), -1);
    expected.add(key_of(S3->multiply(x, g)), 1);
    EXPECT_EQ(Df({g}), expected);
  }
}

TEST(CochainDifferential, SquaresToZeroOnOneCochainsOfZ3) {
  const GroupPtr G = Group::cyclic(3);
  const auto A = Bimodule::regular(G);
  const FiniteHochschildComplex cx(A, F3);
  for (std::size_t i = 0; i < cx.cochain_dim(1); ++i) {
    SparseVector e(F3);
    e.add(i, Scalar::one(F3));
    const auto f = cx.vector_to_cochain(e, 1);
    const auto DDf = cochain_differential(cochain_differential(f));
    EXPECT_TRUE(cx.cochain_to_vector(DDf).is_zero());
    // the assembled matrix agrees with the evaluator
    EXPECT_EQ(cx.cochain_to_vector(cochain_differential(f)), cx.cochain_differential_matrix(1).apply(e));
  }
  EXPECT_TRUE((cx.cochain_differential_matrix(2) * cx.cochain_differential_matrix(1)).is_zero());
}

TEST(CochainDifferential, UnitCochainOfCommutativeAlgebraIsCocycle) {
  const GroupPtr G = Group::cyclic(4);
  const auto A = Bimodule::regular(G);
  const auto Df = cochain_differential(HochschildCochain::unit(A, Q));
  for (const auto& g : G->elements()) EXPECT_TRUE(Df({g}).is_zero());
}

TEST(CochainDifferential, TransportedBackendRejected) {
  const GroupPtr G = Group::free_abelian(1);
  const auto A = Bimodule::regular(G);
  HochschildCochain f(1, A, Q, HochschildCochain::Backend::Transported, [](const Word&) { return ModuleVector(Q); });
  try {
    cochain_differential(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedBackend);
  }
}

TEST(Normalize, KillsUnitLetters) {
  const GroupPtr G = Group::cyclic(4);
  const auto A = Bimodule::regular(G);
  EXPECT_TRUE(normalize(HochschildChain::basis(A, Q, A->unit(), {G->identity()})).is_zero());
  const auto c = HochschildChain::basis(A, Q, A->unit(), {G->generator()});
  EXPECT_EQ(normalize(c), c);
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    const auto x = random_chain(rng, A, Q, 3, true);
    EXPECT_EQ(normalize(normalize(x)), normalize(x));
    EXPECT_EQ(normalize(chain_differential(x)), normalize(chain_differential(normalize(x))));
  }
}

TEST(ConnesB, LengthZero) {
  const GroupPtr G = Group::cyclic(3);
  const auto A = Bimodule::regular(G);
  const auto s = G->generator();
  EXPECT_EQ(connes_B(HochschildChain::basis(A, Q, key_of(s), {})), HochschildChain::basis(A, Q, A->unit(), {s}));
  EXPECT_TRUE(connes_B(HochschildChain::basis(A, Q, A->unit(), {})).is_zero());
  try {
    connes_B(HochschildChain::basis(Bimodule::trivial(G), Q, ModuleKey{}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoefficientsNotInA);
  }
}

TEST(ConnesB, SquaresToZeroAndAnticommutesWithB) {
  for (const auto& [G, ring, max_len] : {std::tuple{Group::cyclic(2), F2, 2}, std::tuple{Group::cyclic(3), F3, 3},
                                         std::tuple{Group::symmetric3(), Q, 2}}) {
    const auto A = Bimodule::regular(G);
    const FiniteHochschildComplex cx(A, ring);
    for (int n = 0; n <= max_len; ++n)
      for (std::size_t i = 0; i < cx.chain_dim(n); ++i) {
        SparseVector e(ring);
        e.add(i, Scalar::one(ring));
        const auto c = cx.vector_to_chain(e, n);
        EXPECT_TRUE(connes_B(connes_B(c)).is_zero());
        EXPECT_TRUE((normalized_differential(connes_B(c)) + connes_B(normalized_differential(c))).is_zero());
      }
  }
}

TEST(ConnesB, AnticommutesOnFundamentalChainOfZ) {
  const GroupPtr G = Group::free_abelian(1);
  const auto A = Bimodule::regular(G);
  const auto c = HochschildChain::basis(A, Q, key_of(G->monomial({-1})), {G->generator()});
  const auto bB = normalized_differential(connes_B(c));
  const auto Bb = connes_B(normalized_differential(c));
  EXPECT_EQ(bB, -Bb);
  HochschildChain expected(A, Q);
  expected.add(BarWord{A->unit(), {G->monomial({-1}), G->generator()}}, Scalar::one(Q));
  expected.add(BarWord{A->unit(), {G->generator(), G->monomial({-1})}}, Scalar(Q, -1));
  EXPECT_EQ(connes_B(c), expected);
}

TEST(TruncatedHomology, DegreeZeroValues) {
  const auto h = truncated_homology(Bimodule::regular(Group::cyclic(2)), F2, 0, 0);
  EXPECT_EQ(h[0].free_rank, 2u);
  for (const GroupPtr& G : {Group::cyclic(3), Group::symmetric3()}) {
    const auto hk = truncated_homology(Bimodule::trivial(G), Q, 0, 0);
    EXPECT_EQ(hk[0].free_rank, 1u);
  }
}

TEST(TruncatedHomology, ZTwoOverF2IsTwoInEveryDegree) {
  const auto h = truncated_homology(Bimodule::regular(Group::cyclic(2)), F2, 0, 5);
  for (const auto& p : h) EXPECT_EQ(p.free_rank, 2u) << "degree " << p.degree;
  const auto c = truncated_cohomology(Bimodule::regular(Group::cyclic(2)), F2, 0, 4);
  for (const auto& p : c) EXPECT_EQ(p.free_rank, 2u) << "degree " << p.degree;
}

TEST(TruncatedHomology, NormalizedAgreesWithUnnormalized) {
  for (const auto& [G, ring, top] : {std::tuple{Group::cyclic(2), F2, 3}, std::tuple{Group::cyclic(3), F3, 3},
                                     std::tuple{Group::cyclic(3), Q, 3}, std::tuple{Group::symmetric3(), F3, 2}}) {
    for (const auto& M : {Bimodule::regular(G), Bimodule::trivial(G)}) {
      const auto a = truncated_homology(M, ring, 0, top, true);
      const auto b = truncated_homology(M, ring, 0, top, false);
      for (int n = 0; n <= top; ++n) EXPECT_EQ(a[n].free_rank, b[n].free_rank) << G->name() << " " << M->name() << " " << n;
    }
  }
}

TEST(TruncatedHomology, IntegerCoefficientsShowTorsion) {
  // H_1(Z/3; Z) = Z/3, H_2 = 0
  const auto h = truncated_homology(Bimodule::trivial(Group::cyclic(3)), Ring::integers(), 0, 2);
  EXPECT_EQ(h[0].free_rank, 1u);
  EXPECT_EQ(h[1].torsion, std::vector<mpz_class>{3});
  EXPECT_EQ(h[2].free_rank, 0u);
  EXPECT_TRUE(h[2].torsion.empty());
}

TEST(TruncatedHomology, ParallelDegreesMatchSerial) {
  const auto M = Bimodule::regular(Group::cyclic(3));
  const auto a = truncated_homology(M, F3, 0, 3, true, 1);
  const auto b = truncated_homology(M, F3, 0, 3, true, 3);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(a[n].free_rank, b[n].free_rank);
    EXPECT_EQ(a[n].representatives, b[n].representatives);
  }
}

TEST(TruncatedHomology, InfiniteGroupRejected) {
  try {
    truncated_homology(Bimodule::regular(Group::free_abelian(1)), Q, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteGroup);
  }
}
