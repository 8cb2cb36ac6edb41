#include <random>

#include <gtest/gtest.h>

#include "hyperplanar/planar.hpp"
#include "test_support.hpp"

using namespace hyperplanar;

namespace {

LaurentInt L(const char* s) { return LaurentInt::parse(s); }
PlanarElement E(const LabeledDiagram& d, LaurentInt c = 1) { return PlanarElement(d, c); }

void expect_associative(const PlanarContext& ctx, const LabeledDiagram& x, const LabeledDiagram& y,
                        const LabeledDiagram& z) {
  const auto lhs = ctx.mul(ctx.mul(E(x), E(y)), E(z));
  const auto rhs = ctx.mul(E(x), ctx.mul(E(y), E(z)));
  EXPECT_EQ(lhs, rhs) << x.to_string() << " / " << y.to_string() << " / " << z.to_string();
}

}  // namespace

TEST(Planar, BasisCounts) {
  EXPECT_EQ(PlanarContext::verlinde(2, 2).basis().size(), 8u);
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(PlanarContext::verlinde(1, r).basis().size(), static_cast<std::size_t>(r));
  EXPECT_EQ(PlanarContext::verlinde(3, 1).basis().size(), 5u);
  EXPECT_EQ(PlanarContext::verlinde(3, 3).basis().size(), 5u * 27u);
  EXPECT_EQ(PlanarContext::verlinde(0, 3).basis().size(), 1u);
}

TEST(Planar, ProductExamples) {
  const auto p23 = PlanarContext::verlinde(2, 3);
  const auto e = make_Ek(2, 1, 1, p23.algebra());
  EXPECT_EQ(p23.mul(e, e), E(e, LaurentInt::delta()));

  const auto p22 = PlanarContext::verlinde(2, 2);
  const auto e_one = make_Ek(2, 1, 0, p22.algebra());
  const auto e_z = make_Ek(2, 1, 1, p22.algebra());
  EXPECT_TRUE(p22.mul(e_one, e_z).is_zero());
  EXPECT_EQ(p22.mul(e_z, e_z), E(e_z, LaurentInt::delta()));

  for (int r = 1; r <= 3; ++r) {
    const auto p3 = PlanarContext::verlinde(3, r);
    const auto e1 = make_Ek(3, 1, 0, p3.algebra());
    const auto e2 = make_Ek(3, 2, 0, p3.algebra());
    EXPECT_EQ(p3.mul(p3.mul(E(e1), E(e2)), E(e1)), E(e1));
    EXPECT_EQ(p3.mul(e1, e1), E(e1, LaurentInt::delta()));
  }
}

TEST(Planar, IdentityIsUnit) {
  const auto z3 = PlanarContext(2, testing_support::cyclic_group(3));
  for (const auto& d : z3.basis()) {
    EXPECT_EQ(z3.mul(z3.one(), E(d)), E(d));
    EXPECT_EQ(z3.mul(E(d), z3.one()), E(d));
  }
}

TEST(Planar, TwoBoxLoopRule) {
  // stored labels b on the bottom arc of the upper factor and b' on the top
  // arc of the lower factor give delta exactly when bar(b) = b'
  const auto ctx = PlanarContext(2, testing_support::cyclic_group(3));
  const auto& alg = ctx.algebra();
  for (BasisIndex x = 0; x < 3; ++x) {
    for (BasisIndex y = 0; y < 3; ++y) {
      const auto top = make_Ek(2, 1, x, alg);
      const auto bottom = make_Ek(2, 1, y, alg);
      const BasisIndex b = top.label(3);
      const BasisIndex bp = bottom.label(1);
      const auto prod = ctx.mul(top, bottom);
      if (alg.bar(b) == bp) {
        LabeledDiagram want = top;
        want.set_label(3, bottom.label(3));
        EXPECT_EQ(prod, E(want, LaurentInt::delta()));
      } else {
        EXPECT_TRUE(prod.is_zero());
      }
    }
  }
}

TEST(Planar, AssociativityExhaustiveSmall) {
  for (int n = 1; n <= 2; ++n) {
    for (int r = 1; r <= 4; ++r) {
      const auto ctx = PlanarContext::verlinde(n, r);
      const auto basis = ctx.basis();
      for (const auto& x : basis)
        for (const auto& y : basis)
          for (const auto& z : basis) expect_associative(ctx, x, y, z);
    }
  }
}

TEST(Planar, AssociativityNontrivialInvolution) {
  // Z/3 has g-bar = h; S_3 is also non-commutative
  const auto z3 = PlanarContext(2, testing_support::cyclic_group(3));
  const auto bz = z3.basis();
  for (const auto& x : bz)
    for (const auto& y : bz)
      for (const auto& z : bz) expect_associative(z3, x, y, z);
  const auto s3 = PlanarContext(1, testing_support::symmetric_group_s3());
  const auto b1 = s3.basis();
  for (const auto& x : b1)
    for (const auto& y : b1)
      for (const auto& z : b1) expect_associative(s3, x, y, z);
  std::mt19937 rng(2024);
  for (int n : {2, 3}) {
    const auto ctx = PlanarContext(n, testing_support::symmetric_group_s3());
    const auto b = ctx.basis();
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int i = 0; i < 1500; ++i) expect_associative(ctx, b[pick(rng)], b[pick(rng)], b[pick(rng)]);
  }
}

TEST(Planar, AssociativitySampledLarger) {
  std::mt19937 rng(12345);
  for (int n : {3, 4}) {
    for (int r = 1; r <= 3; ++r) {
      const auto ctx = PlanarContext::verlinde(n, r);
      const auto b = ctx.basis();
      std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
      for (int i = 0; i < 1000; ++i) expect_associative(ctx, b[pick(rng)], b[pick(rng)], b[pick(rng)]);
    }
  }
}

TEST(Planar, LoopScalarIndependentOfTraversal) {
  for (const auto& alg : {testing_support::cyclic_group(3), testing_support::symmetric_group_s3()}) {
    const PlanarContext ctx(3, alg);
    const auto b = ctx.basis();
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      const auto comp = compose_matchings(b[pick(rng)], b[pick(rng)]);
      for (const auto& loop : comp.loops) {
        const auto base = loop_scalar(loop, alg);
        for (std::size_t s = 0; s < loop.size(); ++s) {
          EXPECT_EQ(loop_scalar(loop, alg, s, false), base);
          EXPECT_EQ(loop_scalar(loop, alg, s, true), base);
        }
      }
    }
  }
}

TEST(Planar, StarAndTraceProperties) {
  std::vector<PlanarContext> ctxs;
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 4; ++r) ctxs.push_back(PlanarContext::verlinde(n, r));
  ctxs.emplace_back(2, testing_support::cyclic_group(3));
  ctxs.emplace_back(2, testing_support::symmetric_group_s3());
  for (const auto& ctx : ctxs) {
    const auto basis = ctx.basis();
    for (const auto& x : basis) {
      EXPECT_EQ(ctx.star(ctx.star(x)), x);
      EXPECT_EQ(ctx.tau(x), ctx.tau(ctx.star(x)));
      for (const auto& y : basis) {
        const auto xy = ctx.mul(x, y);
        EXPECT_EQ(ctx.star(xy), ctx.mul(E(ctx.star(y)), E(ctx.star(x))));
        EXPECT_EQ(ctx.tau(xy), ctx.tau(ctx.mul(y, x)));
      }
    }
  }
}

TEST(Planar, StarExamples) {
  const auto ctx = PlanarContext::verlinde(3, 3);
  const auto& alg = ctx.algebra();
  for (BasisIndex x = 0; x < 3; ++x)
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(ctx.star(make_Ek(3, k, x, alg)), make_Ek(3, k, x, alg));
  EXPECT_EQ(ctx.star(ctx.identity_diagram()), ctx.identity_diagram());
  const auto e1 = E(make_Ek(3, 1, 0, alg));
  const auto e2 = E(make_Ek(3, 2, 0, alg));
  EXPECT_EQ(ctx.star(ctx.mul(e1, e2)), ctx.mul(e2, e1));
  EXPECT_NE(ctx.mul(e1, e2), ctx.mul(e2, e1));
}

TEST(Planar, Traces) {
  for (int n = 0; n <= 5; ++n) {
    const auto ctx = PlanarContext::verlinde(n, 3);
    EXPECT_EQ(ctx.tr(ctx.one()), LaurentInt::delta().pow(static_cast<unsigned>(n)));
    EXPECT_EQ(ctx.tau(ctx.one()), L("1 + v^-2").pow(static_cast<unsigned>(n)));
  }
  const auto p23 = PlanarContext::verlinde(2, 3);
  EXPECT_EQ(p23.tau(E(make_Ek(2, 1, 1, p23.algebra()))), L("v^-1 + v^-3"));
  // a single non-identity propagating label closes into a loop with trace 0
  EXPECT_TRUE(p23.tau(E(p23.tensor_embed({1, 0}))).is_zero());
}

TEST(Planar, Omega) {
  for (int r = 1; r <= 4; ++r) {
    for (int n = 1; n <= 3; ++n) {
      const auto ctx = PlanarContext::verlinde(n, r);
      EXPECT_EQ(ctx.omega(ctx.identity_diagram()), ctx.identity_diagram());
      if (n >= 2) {
        EXPECT_EQ(ctx.omega(make_Ek(n, 1, 0, ctx.algebra())), make_Ek(n, 1, r - 1, ctx.algebra()));
      }
      const auto basis = ctx.basis();
      for (const auto& d : basis) {
        EXPECT_EQ(ctx.omega(ctx.omega(d)), d);
        EXPECT_EQ(ctx.exposed(ctx.omega(d)), ctx.exposed(d));
        for (const auto& e : basis) EXPECT_EQ(ctx.omega(ctx.mul(d, e)), ctx.mul(E(ctx.omega(d)), E(ctx.omega(e))));
      }
    }
  }
  EXPECT_THROW(PlanarContext(2, testing_support::cyclic_group(3)).omega(identity_diagram(2, testing_support::cyclic_group(3))),
               std::domain_error);
}

TEST(Planar, TensorEmbedding) {
  const auto p13 = PlanarContext::verlinde(1, 3);
  EXPECT_EQ(p13.tensor_embed({2}).to_string(), "n=1 | 1-2:2");
  const auto p23 = PlanarContext::verlinde(2, 3);
  const auto x = p23.tensor_embed({1, 1});
  PlanarElement want;
  for (BasisIndex a : {0, 2})
    for (BasisIndex b : {0, 2}) want.add(p23.tensor_embed({a, b}), 1);
  EXPECT_EQ(p23.mul(x, x), want);
  EXPECT_EQ(want.size(), 4u);
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) EXPECT_TRUE(verify_tensor_iso(PlanarContext::verlinde(n, r))) << n << "," << r;
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_tensor_iso(PlanarContext(n, testing_support::cyclic_group(3))));
  for (int n = 1; n <= 2; ++n) EXPECT_TRUE(verify_tensor_iso(PlanarContext(n, testing_support::symmetric_group_s3())));
}

TEST(Planar, ExposedSubalgebra) {
  const std::vector<std::vector<std::size_t>> want = {{1, 2, 5, 14, 42}, {2, 6, 20, 70}};
  for (int r = 1; r <= 2; ++r) {
    for (std::size_t i = 0; i < want[static_cast<std::size_t>(r - 1)].size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      EXPECT_EQ(PlanarContext::verlinde(n, r).exposed_basis().size(), want[static_cast<std::size_t>(r - 1)][i]);
      EXPECT_EQ(exposed_rank(n, r), want[static_cast<std::size_t>(r - 1)][i]);
    }
  }
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(exposed_rank(1, r), r);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      EXPECT_EQ(exposed_rank(n, r), PlanarContext::verlinde(n, r).exposed_basis().size());
  const auto p2 = PlanarContext::verlinde(2, 3);
  EXPECT_FALSE(p2.exposed(LabeledDiagram::parse("n=2 | 1-4:0 2-3:1")));
  EXPECT_TRUE(p2.exposed(LabeledDiagram::parse("n=2 | 1-4:1 2-3:0")));
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) EXPECT_TRUE(verify_exposed_closure(PlanarContext::verlinde(n, r)));
}

TEST(Planar, ElementText) {
  const auto ctx = PlanarContext::verlinde(2, 3);
  PlanarElement x;
  x.add(make_Ek(2, 1, 1, ctx.algebra()), L("v + v^-1"));
  x.add(ctx.identity_diagram(), L("-2"));
  const auto text = element_to_string(x);
  EXPECT_EQ(text, "v + v^-1 * n=2 | 1-2:1 3-4:1\n-2 * n=2 | 1-4:0 2-3:0\n");
  EXPECT_EQ(element_parse(text, ctx), x);
  EXPECT_EQ(element_to_string(PlanarElement()), "0\n");
  EXPECT_TRUE(element_parse("0\n", ctx).is_zero());
  EXPECT_THROW(element_parse("", ctx), ParseError);
  EXPECT_THROW(element_parse("1 * n=3 | 1-6:0 2-5:0 3-4:0", ctx), ParseError);
  EXPECT_THROW(element_parse("1 * n=2 | 1-4:3 2-3:0", ctx), ParseError);
}
