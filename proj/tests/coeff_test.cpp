#include <random>

#include <gtest/gtest.h>

#include "hyperplanar/coeff.hpp"

using hyperplanar::LaurentInt;
using hyperplanar::ParseError;
using hyperplanar::QSqrt2;
using hyperplanar::Rational;

namespace {

LaurentInt L(const char* s) { return LaurentInt::parse(s); }

LaurentInt random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-5, 5);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> terms(0, 4);
  LaurentInt a;
  for (int i = terms(rng); i > 0; --i) a += LaurentInt::monomial(exp(rng), coef(rng));
  return a;
}

}  // namespace

TEST(Laurent, Arithmetic) {
  const LaurentInt d = LaurentInt::delta();
  EXPECT_EQ(d * d, L("v^2 + 2 + v^-2"));
  EXPECT_EQ(d * LaurentInt(1), L("v + v^-1"));
  EXPECT_TRUE((LaurentInt::v() - LaurentInt::v()).is_zero());
  EXPECT_TRUE((LaurentInt::v() + -LaurentInt::v()).terms().empty());
}

TEST(Laurent, Bar) {
  EXPECT_EQ(L("v^2").bar(), L("v^-2"));
  EXPECT_EQ(LaurentInt::delta().bar(), LaurentInt::delta());
  EXPECT_EQ(L("3v^3 - v^-1").bar().bar(), L("3v^3 - v^-1"));
}

TEST(Laurent, DegreeAndSubrings) {
  EXPECT_EQ(L("v + v^-1").degree(), 1);
  EXPECT_FALSE(LaurentInt().degree().has_value());
  EXPECT_TRUE(L("1 + v^-2").in_Aminus());
  EXPECT_FALSE(L("1 + v^-2").in_vinv_Aminus());
  EXPECT_EQ(L("v^-1 + v^-3").constant_term(), 0);
  EXPECT_TRUE(L("1 + 3v^-2").congruent_mod_vinv_Aminus(1));
  EXPECT_FALSE(L("v^-1 + v").congruent_mod_vinv_Aminus(0));
}

TEST(Laurent, TextRoundTrip) {
  EXPECT_EQ(L("2v^3 - 1 + v^-2").to_string(), "2v^3 - 1 + v^-2");
  EXPECT_EQ(LaurentInt().to_string(), "0");
  EXPECT_EQ(LaurentInt::v().to_string(), "v");
  EXPECT_EQ((-LaurentInt::v()).to_string(), "-v");
  EXPECT_EQ(L(" -v^-1 +  v ").to_string(), "v - v^-1");
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const LaurentInt a = random_laurent(rng);
    EXPECT_EQ(LaurentInt::parse(a.to_string()), a) << a;
  }
  EXPECT_THROW(L("v^"), ParseError);
  EXPECT_THROW(L("2v3"), ParseError);
  EXPECT_THROW(L(""), ParseError);
  EXPECT_THROW(L("x"), ParseError);
}

TEST(Laurent, RingProperties) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const LaurentInt a = random_laurent(rng);
    const LaurentInt b = random_laurent(rng);
    const LaurentInt c = random_laurent(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    EXPECT_EQ((a + b).bar(), a.bar() + b.bar());
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ(*(a * b).degree(), *a.degree() + *b.degree());
    }
  }
}

TEST(Laurent, BigCoefficients) {
  LaurentInt x = L("v + 1");
  const LaurentInt p = x.pow(80);
  // central binomial coefficient C(80, 40) overflows 64 bits
  EXPECT_EQ(p.coefficient(40).str(), "107507208733336176461620");
  EXPECT_EQ(LaurentInt::parse(p.to_string()), p);
}

TEST(Laurent, EvalMod) {
  const unsigned long long p = 1000003;
  // 2v + 3v^-1 at v = 2 (inverse of 2 mod p is 500002)
  EXPECT_EQ(L("2v + 3v^-1").eval_mod(2, 500002, p), (4 + 3 * 500002ULL) % p);
  EXPECT_EQ(L("-1").eval_mod(5, 200001, p), p - 1);
}

TEST(QSqrt2, Field) {
  const QSqrt2 s = QSqrt2::sqrt2();
  EXPECT_EQ(s * s, QSqrt2(2));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  auto rnd = [&] { return QSqrt2(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
  for (int i = 0; i < 200; ++i) {
    const QSqrt2 a = rnd();
    const QSqrt2 b = rnd();
    const QSqrt2 c = rnd();
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), QSqrt2(1));
    }
  }
  EXPECT_THROW(QSqrt2().inverse(), std::domain_error);
}
