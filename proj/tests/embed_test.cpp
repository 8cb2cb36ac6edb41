#include <gtest/gtest.h>

#include "hyperplanar/embed.hpp"

using namespace hyperplanar;

namespace {

struct TypeCase {
  CoxeterType type;
  int rank;
  int m;
};

std::vector<TypeCase> embedding_types() {
  std::vector<TypeCase> out{{CoxeterType::A, 2, 0}, {CoxeterType::A, 3, 0}, {CoxeterType::B, 2, 0},
                            {CoxeterType::B, 3, 0}, {CoxeterType::H, 3, 0}};
  for (int m = 3; m <= 8; ++m) out.push_back({CoxeterType::I, 2, m});
  return out;
}

void print(const EmbeddingReport& rep) {
  for (const auto& w : rep.witnesses) ADD_FAILURE() << rep.group << " " << to_string(rep.variant) << ": " << w;
}

}  // namespace

TEST(Admissible, ICounts) {
  for (int r = 2; r <= 8; ++r) {
    const auto ctx = PlanarContext::verlinde(3, r);
    EXPECT_EQ(admissible(AdmissibleFlavor::I, ctx).members.size(), static_cast<std::size_t>(2 * r + 1)) << r;
  }
  // V_1 has no u_1: only the identity and the diagram with non-transitional arcs survive
  EXPECT_EQ(admissible(AdmissibleFlavor::I, PlanarContext::verlinde(3, 1)).members.size(), 2u);
}

TEST(Admissible, BAndHCounts) {
  EXPECT_EQ(admissible(AdmissibleFlavor::B, PlanarContext::verlinde(3, 3)).members.size(), 7u);
  EXPECT_EQ(admissible(AdmissibleFlavor::B, PlanarContext::verlinde(4, 3)).members.size(), 24u);
  EXPECT_EQ(admissible(AdmissibleFlavor::H, PlanarContext::verlinde(4, 4)).members.size(), 44u);
  EXPECT_EQ(admissible(AdmissibleFlavor::H, PlanarContext::verlinde(3, 4)).members.size(), 9u);
  EXPECT_EQ(admissible(AdmissibleFlavor::H, PlanarContext::verlinde(4, 4), HReading::literal).members.size(), 67u);
}

TEST(Admissible, Examples) {
  const auto ctx = PlanarContext::verlinde(3, 3);
  EXPECT_TRUE(is_admissible(AdmissibleFlavor::B, ctx, ctx.identity_diagram()));
  EXPECT_FALSE(is_admissible(AdmissibleFlavor::B, ctx, make_Ek(3, 2, 1, ctx.algebra())));
  EXPECT_FALSE(ctx.exposed(make_Ek(3, 2, 1, ctx.algebra())));
  EXPECT_TRUE(is_admissible(AdmissibleFlavor::B, ctx, make_Ek(3, 1, 1, ctx.algebra())));
  EXPECT_THROW(admissible(AdmissibleFlavor::H, ctx), std::invalid_argument);
  EXPECT_THROW(admissible(AdmissibleFlavor::I, PlanarContext::verlinde(4, 3)), std::invalid_argument);
  const auto p43 = PlanarContext::verlinde(4, 3);
  for (const auto& d : admissible(AdmissibleFlavor::B, p43).members) EXPECT_TRUE(p43.exposed(d));
}

TEST(Admissible, ClosedUnderProducts) {
  const auto b = PlanarContext::verlinde(4, 3);
  EXPECT_TRUE(admissible_closed(b, admissible(AdmissibleFlavor::B, b).members));
  const auto h = PlanarContext::verlinde(4, 4);
  EXPECT_TRUE(admissible_closed(h, admissible(AdmissibleFlavor::H, h).members));
  for (int r = 2; r <= 6; ++r) {
    const auto i = PlanarContext::verlinde(3, r);
    EXPECT_TRUE(admissible_closed(i, admissible(AdmissibleFlavor::I, i).members)) << r;
  }
}

TEST(Rho, TargetsAndCompatibility) {
  const CoxeterGroup a2(CoxeterType::A, 2);
  EXPECT_EQ(rho_target(RhoVariant::A, a2).n, 3);
  EXPECT_EQ(rho_target(RhoVariant::A, a2).r, 2);
  EXPECT_EQ(rho_target(RhoVariant::uniform, a2).r, 2);
  EXPECT_EQ(rho_target(RhoVariant::uniform, CoxeterGroup(CoxeterType::H, 3)).r, 4);
  EXPECT_EQ(rho_target(RhoVariant::I, CoxeterGroup(CoxeterType::I, 2, 7)).r, 6);
  EXPECT_THROW(rho_target(RhoVariant::B, a2), std::invalid_argument);
  EXPECT_THROW(rho_target(RhoVariant::uniform, CoxeterGroup(CoxeterType::A, 1)), std::invalid_argument);
}

TEST(Rho, GeneratorExamples) {
  const TLContext tl(CoxeterGroup(CoxeterType::I, 2, 5));
  const Rho rho(tl, RhoVariant::I);
  const auto& ctx = rho.planar();
  const PlanarElement e1(rho.generator_image(0));
  EXPECT_EQ(rho.generator_image(0), make_Ek(3, 1, 1, ctx.algebra()));
  EXPECT_EQ(ctx.mul(e1, e1), e1.scaled(LaurentInt::delta()));
  EXPECT_EQ(rho.apply(tl.b(0)), e1);
}

TEST(Rho, EmbeddingsAllTypes) {
  for (const auto& c : embedding_types()) {
    const TLContext tl(CoxeterGroup(c.type, c.rank, c.m));
    for (RhoVariant v : {natural_variant(tl.group()), RhoVariant::uniform}) {
      const Rho rho(tl, v);
      const auto rep = rho_build(rho);
      EXPECT_TRUE(rep.ok()) << rep.group << " " << to_string(v);
      EXPECT_EQ(rep.image_count, rep.wc_count);
      EXPECT_EQ(rep.expected_count, rep.wc_count);
      print(rep);
      if (v == RhoVariant::I) {
        ASSERT_TRUE(rep.dihedral_descents.has_value());
        EXPECT_TRUE(*rep.dihedral_descents);
      }
    }
  }
}

TEST(Rho, TypeAImageIsPlainTemperleyLieb) {
  for (int n = 1; n <= 3; ++n) {
    const TLContext tl(CoxeterGroup(CoxeterType::A, n));
    const auto rep = rho_build(Rho(tl, RhoVariant::A));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.image_count, catalan(n + 1));
  }
}

TEST(Rho, B2AsDihedral) {
  // B2 = I2(4): the uniform maps coincide on generators
  const TLContext b2(CoxeterGroup(CoxeterType::B, 2));
  const TLContext i4(CoxeterGroup(CoxeterType::I, 2, 4));
  const Rho rb(b2, RhoVariant::uniform);
  const Rho ri(i4, RhoVariant::uniform);
  EXPECT_EQ(rb.generator_image(0), ri.generator_image(0));
  EXPECT_EQ(rb.generator_image(1), ri.generator_image(1));
  EXPECT_EQ(rho_build(ri).image_count, 7u);
}

TEST(Omega, FixesTypeBAndEvenDihedral) {
  const TLContext b3(CoxeterGroup(CoxeterType::B, 3));
  EXPECT_TRUE(omega_fixes_image(Rho(b3, RhoVariant::B)));
  const TLContext i4(CoxeterGroup(CoxeterType::I, 2, 4));
  EXPECT_TRUE(omega_fixes_image(Rho(i4, RhoVariant::I)));
  // for larger even m, u_{r-1} u_1 = u_{r-2} != u_1 in V_{m-1}, so E_1(u_1) moves
  for (int m : {6, 8}) {
    const TLContext tl(CoxeterGroup(CoxeterType::I, 2, m));
    const Rho rho(tl, RhoVariant::I);
    EXPECT_EQ(omega_moves_image(rho), std::optional<Element>(tl.group().generator(0))) << m;
    EXPECT_EQ(rho.planar().omega(rho.generator_image(0)), make_Ek(3, 1, static_cast<BasisIndex>(m - 3), rho.planar().algebra()));
  }
  // odd m: omega moves something
  const TLContext i5(CoxeterGroup(CoxeterType::I, 2, 5));
  EXPECT_TRUE(omega_moves_image(Rho(i5, RhoVariant::I)).has_value());
}

TEST(Omega, UniformIsOmegaOfAAndH) {
  for (int n = 2; n <= 3; ++n) {
    const TLContext tl(CoxeterGroup(CoxeterType::A, n));
    const Rho a(tl, RhoVariant::A);
    const Rho u(tl, RhoVariant::uniform);
    EXPECT_TRUE(uniform_is_omega_of(u, a));
    const auto moved = omega_moves_image(a);
    ASSERT_TRUE(moved.has_value());
    EXPECT_EQ(*moved, tl.group().generator(0));
  }
  const TLContext h3(CoxeterGroup(CoxeterType::H, 3));
  EXPECT_TRUE(uniform_is_omega_of(Rho(h3, RhoVariant::uniform), Rho(h3, RhoVariant::H)));
  const TLContext b3(CoxeterGroup(CoxeterType::B, 3));
  EXPECT_TRUE(uniform_is_omega_of(Rho(b3, RhoVariant::uniform), Rho(b3, RhoVariant::B)));
}

TEST(Form, AdjunctionOrthonormalityAndClassification) {
  for (const auto& c : embedding_types()) {
    const TLContext tl(CoxeterGroup(c.type, c.rank, c.m));
    const Rho rho(tl, RhoVariant::uniform);
    const auto rep = form_check(rho);
    EXPECT_TRUE(rep.ok()) << tl.group().name();
    for (const auto& w : rep.witnesses) ADD_FAILURE() << tl.group().name() << ": " << w;
  }
}

TEST(Form, NonCanonicalRejected) {
  const TLContext tl(CoxeterGroup(CoxeterType::A, 2));
  const Rho rho(tl, RhoVariant::uniform);
  const TLForm form(rho);
  std::vector<TLElement> canon;
  for (Element w : tl.wc()) canon.push_back(tl.canonical(w));
  auto f = [&](const TLElement& a, const TLElement& b) { return form(a, b); };
  auto bar = [&](const TLElement& a) { return tl.bar(a); };
  // t_s is not bar invariant
  EXPECT_FALSE(classify_canonical(tl.t(tl.group().generator(0)), canon, f, bar).hypotheses_hold);
  // 2 c_e has (x, x) = 4
  EXPECT_FALSE(classify_canonical(TLElement(canon[0].scaled(LaurentInt(2))), canon, f, bar).hypotheses_hold);
  EXPECT_EQ(classify_canonical(canon[1], canon, f, bar).sign, CanonicalSign::plus);
}

TEST(KazhdanLusztigImages, FiniteTypes) {
  std::vector<TypeCase> types{{CoxeterType::A, 2, 0}, {CoxeterType::A, 3, 0}, {CoxeterType::B, 2, 0},
                              {CoxeterType::B, 3, 0}, {CoxeterType::H, 3, 0}};
  for (int m = 3; m <= 6; ++m) types.push_back({CoxeterType::I, 2, m});
  for (const auto& c : types) {
    const TLContext tl(CoxeterGroup(c.type, c.rank, c.m));
    const auto rep = conjecture_check(tl);
    EXPECT_TRUE(rep.ok()) << rep.group;
    EXPECT_EQ(rep.nonzero_count, tl.wc().size()) << rep.group;
    EXPECT_EQ(rep.zero_count + rep.nonzero_count, rep.group_size);
    for (const auto& w : rep.witnesses) ADD_FAILURE() << rep.group << ": " << w;
  }
  // A2: the longest element is complex and its Kazhdan-Lusztig element vanishes
  const TLContext a2(CoxeterGroup(CoxeterType::A, 2));
  const Rho rho(a2, RhoVariant::uniform);
  EXPECT_TRUE(rho.apply_hecke(a2.hecke().kl(a2.group().longest())).is_zero());
}

TEST(Drank, Sequences) {
  EXPECT_EQ(drank_sequence(1, 5), (std::vector<BigInt>{1, 2, 5, 14, 42}));
  EXPECT_EQ(drank_sequence(2, 4), (std::vector<BigInt>{2, 6, 20, 70}));
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(drank_sequence(r, 1).front(), BigInt(r));
  // agrees with direct enumeration of exposed diagrams
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(drank_sequence(3, n).back(), BigInt(PlanarContext::verlinde(n, 3).exposed_basis().size()));
  EXPECT_THROW(drank_sequence(2, 14), std::out_of_range);
  EXPECT_THROW(drank_sequence(0, 3), std::invalid_argument);
}
