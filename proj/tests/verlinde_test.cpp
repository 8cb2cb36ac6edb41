#include <gtest/gtest.h>

#include "hyperplanar/verlinde.hpp"

using namespace hyperplanar;

namespace {

IntPolynomial poly(std::initializer_list<int> c) {
  IntPolynomial p;
  for (int x : c) p.emplace_back(x);
  return p;
}

TAElement sum(std::initializer_list<BasisIndex> idx) {
  TAElement r;
  for (auto i : idx) r.add(i, 1);
  return r;
}

}  // namespace

TEST(Chebyshev, Values) {
  EXPECT_EQ(chebyshev(0), poly({1}));
  EXPECT_EQ(chebyshev(1), poly({0, 1}));
  EXPECT_EQ(chebyshev(2), poly({-1, 0, 1}));
  EXPECT_EQ(chebyshev(3), poly({0, -2, 0, 1}));
  EXPECT_EQ(chebyshev(4), poly({1, 0, -3, 0, 1}));
}

TEST(Verlinde, ClebschGordanExamples) {
  EXPECT_EQ(verlinde_make(3).algebra.mul_basis(1, 1), sum({0, 2}));
  EXPECT_EQ(verlinde_make(4).algebra.mul_basis(2, 2), sum({0, 2}));
  const auto v1 = verlinde_make(1).algebra;
  EXPECT_EQ(v1.rank(), 1);
  EXPECT_EQ(v1.mul_basis(0, 0), sum({0}));
  EXPECT_EQ(verlinde_make(5).algebra.label(3), "u3");
  EXPECT_THROW(verlinde_make(0), std::invalid_argument);
}

TEST(Verlinde, ChecksAndOracleAgreement) {
  for (int r = 1; r <= 8; ++r) {
    const auto v = verlinde_make(r).algebra;
    EXPECT_TRUE(ta_check(v).ok()) << r;
    EXPECT_EQ(v, verlinde_by_reduction(r)) << r;
    EXPECT_TRUE(is_verlinde(v));
    for (BasisIndex i = 0; i < r; ++i) {
      EXPECT_EQ(v.bar(i), i);
      for (BasisIndex j = 0; j < r; ++j) EXPECT_EQ(v.kappa(0, i, j), i == j ? 1 : 0);
    }
  }
}

TEST(Verlinde, LongestBasisElement) {
  EXPECT_EQ(verlinde_make(5).algebra.mul_basis(1, 4), sum({3}));
  EXPECT_EQ(verlinde_make(2).algebra.mul_basis(1, 1), sum({0}));
  for (int r = 1; r <= 8; ++r) EXPECT_TRUE(verlinde_w_verify(r)) << r;
}

TEST(Verlinde, PhiIntoV2) {
  using V2 = PhiV3V2::V2Element;
  const V2 y = PhiV3V2::image(1);
  const V2 z = PhiV3V2::image(2);
  EXPECT_EQ(PhiV3V2::mul(y, y), (V2{QSqrt2(1), QSqrt2(1)}));
  EXPECT_EQ(PhiV3V2::mul(z, z), (V2{QSqrt2(1), QSqrt2(0)}));
  EXPECT_EQ(PhiV3V2::mul(y, z), y);
  EXPECT_TRUE(phi_v3_v2_verify());
}
