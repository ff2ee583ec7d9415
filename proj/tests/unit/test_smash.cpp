#include <gtest/gtest.h>

#include "examples.hpp"
#include "weakhopf/axioms.hpp"
#include "weakhopf/errors.hpp"

using namespace weakhopf;
using namespace weakhopf::examples;

namespace {

ComoduleBialgebra over_ground(const WeakHopf& h, const std::vector<std::string>& element) {
  const WeakHopf k = ground_hopf(q());
  const CoactionMap cm = rho_h_coaction(h, k.coalgebra(), vec(h.space(), element));
  return ComoduleBialgebra{h, k, k.antipode(), cm.rho()};
}

}  // namespace

TEST(Smash, ProjectorMatchesHandFormula) {
  // ρ(c) = δ_{1:e} ⊗ c and Δ(δ_g) = δ_g⊗δ_g give P(c⊗δ_g) = c⊗δ_g if r(g) = 1:e, else 0
  const ComoduleBialgebra cb = running_smash_input();
  const AmbientMaps amb = ambient_maps(cb);
  const Groupoid g = Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)});
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t h = 0; h < 4; ++h) {
      const std::size_t col = c * 4 + h;
      const Vector expected = g.target(h) == 0 ? Vector::basis(amb.ambient, col) : Vector::zero(amb.ambient);
      EXPECT_EQ(amb.projector.column(col), expected) << amb.ambient.label(col);
    }
  EXPECT_EQ(amb.unit, Vector::basis(amb.ambient, 0));
}

TEST(Smash, RunningExampleIsFourDimensionalWeakHopf) {
  const SmashCoproduct s = build_smash(running_smash_input(), true);
  EXPECT_EQ(s.subspace.dim(), 4u);
  EXPECT_EQ(rank(s.ambient.projector), 4u);
  EXPECT_TRUE(s.report.passed()) << s.report.to_text();
  for (const char* name : {"product_of_projected_elements", "counit_lemma.counit_weak_multiplicative",
                           "counit_lemma.counit_weak_multiplicative_flipped", "unit_lemma.unit_coproduct_left_first",
                           "unit_lemma.unit_coproduct_right_first", "unit_left_identity", "unit_right_identity"}) {
    EXPECT_TRUE(s.report.passed(name)) << name;
  }
  ASSERT_TRUE(s.hopf);
  EXPECT_TRUE(check_weak_hopf(*s.hopf).passed());
  EXPECT_EQ(s.bialgebra.space().label(0), "e⊗1:e");
  // S_C and S_H restricted to G₁ are inversion in Z2, so S is the identity here
  EXPECT_TRUE(maps_equal(s.hopf->antipode(), LinMap::identity(s.bialgebra.space())));
}

TEST(Smash, UnitIsProjectedTensorUnit) {
  const SmashCoproduct s = build_smash(running_smash_input(), false);
  const Vector one = tensor_vector(kz2_hopf().unit(), kg_z2z2().unit());
  EXPECT_EQ(s.inclusion.apply(s.bialgebra.unit()), s.ambient.projector.apply(one));
  EXPECT_FALSE(s.hopf);
}

TEST(Smash, GroundCoalgebraGivesTwoDimensions) {
  const SmashCoproduct s = build_smash(over_ground(kg_z2z2(), {"1", "0", "0", "0"}), true);
  EXPECT_EQ(s.subspace.dim(), 2u);
  EXPECT_TRUE(s.report.passed()) << s.report.to_text();
}

TEST(Smash, SecondComponentGivesTheOtherCopy) {
  const SmashCoproduct s = build_smash(over_ground(kg_z2z2(), {"0", "1", "0", "0"}), true);
  EXPECT_EQ(s.subspace.dim(), 2u);
  EXPECT_EQ(s.bialgebra.space().label(0), "1⊗2:e");
  EXPECT_TRUE(s.report.passed());
}

TEST(Smash, NonCommutativeHopfRefusesAntipode) {
  const ComoduleBialgebra cb = over_ground(kg_z2s3(), {"1", "0", "0", "0", "0", "0", "0", "0"});
  EXPECT_THROW(build_smash(cb, true), PreconditionError);
  const SmashCoproduct s = build_smash(cb, false);
  EXPECT_TRUE(s.report.passed()) << s.report.to_text();
  EXPECT_FALSE(s.report.find("hopf_commutative")->passed);
}

TEST(Smash, NonComoduleInputIsRefused) {
  ComoduleBialgebra cb = running_smash_input();
  const WeakHopf h = kg_z2z2();
  cb.rho = rho_h_coaction(h, kz2_hopf().coalgebra(), vec(h.space(), {"0", "0", "1", "0"})).rho();
  EXPECT_THROW(build_smash(cb, false), PreconditionError);
  EXPECT_FALSE(check_comodule_bialgebra(cb).passed());
}

TEST(Smash, AntipodeAxiomsHoldInAmbientCoordinates) {
  const SmashCoproduct s = build_smash(running_smash_input(), true);
  const Report r = verify_smash_antipode(s);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.checks().size(), 3u);
}
