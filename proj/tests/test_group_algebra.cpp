#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "hochbv/group_algebra.hpp"

using namespace hochbv;

namespace {

const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);

GroupPtr load(const std::string& file) {
  std::ifstream in(std::string(HOCHBV_DATA_DIR) + "/groups/" + file);
  return Group::from_json(nlohmann::json::parse(in));
}

GroupAlgebraElement random_element(std::mt19937& rng, const GroupPtr& G, Ring ring) {
  GroupAlgebraElement x(G, ring);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < 3; ++i) {
    GroupElement g = G->is_finite() ? G->element(rng() % G->order()) : G->identity();
    if (!G->is_finite())
      for (auto& c : g.c) c = static_cast<std::int64_t>(rng() % 7) - 3;
    x += GroupAlgebraElement::basis(G, ring, g).scaled(Scalar(ring, coef(rng)));
  }
  return x;
}

}  // namespace

TEST(Group, AxiomsHoldForShippedFiniteGroups) {
  for (const char* file : {"trivial.json", "z2.json", "z3.json", "z4.json", "s3.json"}) {
    const GroupPtr G = load(file);
    for (const auto& a : G->elements()) {
      EXPECT_EQ(G->multiply(a, G->inverse(a)), G->identity());
      EXPECT_EQ(G->multiply(G->identity(), a), a);
      for (const auto& b : G->elements())
        for (const auto& c : G->elements())
          EXPECT_EQ(G->multiply(G->multiply(a, b), c), G->multiply(a, G->multiply(b, c)));
    }
  }
  EXPECT_EQ(load("s3.json")->order(), 6u);
  EXPECT_EQ(*load("s3.json"), *Group::symmetric3());
}

TEST(Group, InvalidTablesRejected) {
  try {
    load("bad_not_associative.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGroup);
  }
  EXPECT_THROW(Group::finite({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(Group::finite({{0, 1}}), Error);
  EXPECT_THROW(Group::from_json(nlohmann::json{{"kind", "lie"}}), Error);
}

TEST(Group, FreeAbelianLawsOnRandomExponents) {
  const GroupPtr G = Group::free_abelian(3);
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto r = [&] { return G->monomial({static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 11) - 5,
                                       static_cast<std::int64_t>(rng() % 11) - 5}); };
    const auto a = r(), b = r(), c = r();
    EXPECT_EQ(G->multiply(G->multiply(a, b), c), G->multiply(a, G->multiply(b, c)));
    EXPECT_EQ(G->multiply(a, G->inverse(a)), G->identity());
    EXPECT_EQ(G->multiply(a, G->identity()), a);
  }
  EXPECT_THROW(G->elements(), Error);
}

TEST(GroupAlgebra, Multiply) {
  const GroupPtr Zg = Group::free_abelian(1);
  const auto t2 = GroupAlgebraElement::basis(Zg, Q, Zg->monomial({2}));
  const auto tm3 = GroupAlgebraElement::basis(Zg, Q, Zg->monomial({-3}));
  EXPECT_EQ(t2 * tm3, GroupAlgebraElement::basis(Zg, Q, Zg->monomial({-1})));

  const GroupPtr S3 = Group::symmetric3();
  for (const auto& g : S3->elements())
    EXPECT_EQ(GroupAlgebraElement::basis(S3, Q, g) * GroupAlgebraElement::basis(S3, Q, S3->inverse(g)),
              GroupAlgebraElement::unit(S3, Q));

  const GroupPtr C2 = Group::cyclic(2);
  const auto one_plus_s = GroupAlgebraElement::unit(C2, F2) + GroupAlgebraElement::basis(C2, F2, C2->generator());
  EXPECT_TRUE((one_plus_s * one_plus_s).is_zero());
}

TEST(GroupAlgebra, Mismatches) {
  const auto x = GroupAlgebraElement::unit(Group::cyclic(2), Q);
  const auto y = GroupAlgebraElement::unit(Group::cyclic(3), Q);
  const auto z = GroupAlgebraElement::unit(Group::cyclic(2), F2);
  try {
    (void)(x * y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupMismatch);
  }
  try {
    (void)(x * z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
}

TEST(GroupAlgebra, Augmentation) {
  const Ring Z = Ring::integers();
  const GroupPtr Zg = Group::free_abelian(1);
  EXPECT_TRUE(augment(GroupAlgebraElement::unit(Zg, Z)).is_one());
  const auto t_minus_1 = GroupAlgebraElement::basis(Zg, Z, Zg->generator()) - GroupAlgebraElement::unit(Zg, Z);
  EXPECT_TRUE(augment(t_minus_1).is_zero());
  const GroupPtr S3 = Group::symmetric3();
  const auto x = GroupAlgebraElement::basis(S3, Z, S3->element(1)).scaled(Scalar(Z, 3)) +
                 GroupAlgebraElement::basis(S3, Z, S3->element(4)).scaled(Scalar(Z, 2));
  EXPECT_EQ(augment(x).to_string(), "5");
}

TEST(GroupAlgebra, AugmentationIsMultiplicative) {
  std::mt19937 rng(9);
  for (const GroupPtr& G : {Group::symmetric3(), Group::free_abelian(2)}) {
    for (int t = 0; t < 40; ++t) {
      const auto x = random_element(rng, G, Q), y = random_element(rng, G, Q);
      EXPECT_EQ(augment(x * y), augment(x) * augment(y));
    }
  }
}

TEST(EnvelopingAlgebra, EmbeddingE) {
  const GroupPtr Zg = Group::free_abelian(1);
  EXPECT_EQ(embed_E(Zg, Q, Zg->identity()).to_string(), "1*(1|1)");
  EXPECT_EQ(embed_E(Zg, Q, Zg->generator()).to_string(), "1*(t|t^-1)");
  const GroupPtr S3 = Group::symmetric3();
  for (const auto& g : S3->elements())
    for (const auto& h : S3->elements())
      EXPECT_EQ(embed_E(S3, Q, S3->multiply(g, h)), multiply(embed_E(S3, Q, g), embed_E(S3, Q, h)));
  // unital
  const auto one = embed_E(S3, Q, S3->identity());
  for (const auto& g : S3->elements()) EXPECT_EQ(multiply(one, embed_E(S3, Q, g)), embed_E(S3, Q, g));
}

TEST(EnvelopingAlgebra, OppositeOrderInSecondFactor) {
  const GroupPtr S3 = Group::symmetric3();
  const auto a = S3->element(1), b = S3->element(3);
  ASSERT_NE(S3->multiply(a, b), S3->multiply(b, a));
  EnvelopingElement x(S3, Q), y(S3, Q);
  x.add(S3->identity(), a, Scalar::one(Q));
  y.add(S3->identity(), b, Scalar::one(Q));
  EnvelopingElement expected(S3, Q);
  expected.add(S3->identity(), S3->multiply(b, a), Scalar::one(Q));
  EXPECT_EQ(multiply(x, y), expected);
}

TEST(Bimodule, ActionsAndConjugation) {
  const GroupPtr S3 = Group::symmetric3();
  const auto A = Bimodule::regular(S3);
  const auto k = Bimodule::trivial(S3);
  const auto AA = Bimodule::outer(S3);
  const auto g = S3->element(1), h = S3->element(3);
  for (const auto& m : A->basis()) {
    EXPECT_EQ(A->conj_left(g, m), key_of(S3->multiply(S3->multiply(g, element_of(m)), S3->inverse(g))));
    EXPECT_EQ(A->conj_right(A->conj_left(g, m), g), m);
    // right conjugation action is an action: (m.g).h = m.(gh)
    EXPECT_EQ(A->conj_right(A->conj_right(m, g), h), A->conj_right(m, S3->multiply(g, h)));
  }
  EXPECT_EQ(k->left(g, k->unit()), k->unit());
  EXPECT_EQ(AA->dimension(), 36u);
  const auto xy = Bimodule::join(g, h);
  EXPECT_EQ(AA->left(h, AA->right(xy, g)), Bimodule::join(S3->multiply(h, g), S3->multiply(h, g)));
  EXPECT_THROW(balanced_product(AA, AA), Error);
  EXPECT_EQ(balanced_product(A, k).result->kind(), BimoduleKind::Trivial);
  EXPECT_EQ(balanced_product(k, k).result->kind(), BimoduleKind::Trivial);
}
