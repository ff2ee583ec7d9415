#include <gtest/gtest.h>

#include "examples.hpp"
#include "weakhopf/axioms.hpp"
#include "weakhopf/dual.hpp"

using namespace weakhopf;
using namespace weakhopf::examples;

namespace {

void expect_same_structure(const WeakHopf& a, const WeakHopf& b) {
  EXPECT_EQ(a.dim(), b.dim());
  EXPECT_TRUE(maps_equal(a.mult(), b.mult().relabel(a.mult().domain(), a.mult().codomain())));
  EXPECT_EQ(a.unit(), b.unit());
  EXPECT_TRUE(maps_equal(a.comult(), b.comult().relabel(a.comult().domain(), a.comult().codomain())));
  EXPECT_TRUE(maps_equal(a.counit(), b.counit().relabel(a.counit().domain(), a.counit().codomain())));
  EXPECT_TRUE(maps_equal(a.antipode(), b.antipode().relabel(a.space(), a.space())));
}

}  // namespace

TEST(Core, GroupoidAlgebraPassesEverySuite) {
  const Report r = check_weak_hopf(kg_z2z2());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_GE(check_identity_suite(kg_z2z2()).checks().size(), 25u);
}

TEST(Core, DualPassesEverySuite) {
  const Report r = check_weak_hopf(kg_z2z2_dual());
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Core, SuitesHoldOverPrimeField) {
  const WeakHopf h = groupoid_algebra(Groupoid::disjoint_union({FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)}),
                                      Field::prime(5));
  EXPECT_TRUE(check_weak_hopf(h).passed());
}

TEST(Core, TargetAndSourceMapsFollowTheGroupoid) {
  const Groupoid g = Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::symmetric3()});
  const WeakHopf h = groupoid_algebra(g, q());
  const CounitalPair cp = counital_maps(h);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(cp.target.column(i), Vector::basis(h.space(), g.target(i))) << g.label(i);
    EXPECT_EQ(cp.source.column(i), Vector::basis(h.space(), g.source(i))) << g.label(i);
  }
  EXPECT_EQ(cp.target_algebra.dim(), 2u);
  EXPECT_EQ(cp.source_algebra.dim(), 2u);
}

TEST(Core, DualIsAnInvolutionOnStructureConstants) {
  expect_same_structure(dual_weak_hopf(dual_weak_hopf(kg_z2z2())), kg_z2z2());
  expect_same_structure(dual_weak_hopf(dual_weak_hopf(group_weak_z2())), group_weak_z2());
}

TEST(Core, DualTargetMapIsPrecomposition) {
  const WeakHopf h = kg_z2z2();
  const WeakHopf hd = dual_weak_hopf(h);
  const LinMap et = counital_maps(h).target;
  const LinMap etd = counital_maps(hd).target;
  // (f∘ε_t)(δ_j) = Σ_i f_i (ε_t)_{ij}: the transposed matrix
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < h.dim(); ++c) EXPECT_EQ(etd.at(r, c), et.at(c, r));
}

TEST(Core, DualLabelsAreDualBasis) {
  const WeakHopf hd = kg_z2z2_dual();
  EXPECT_EQ(hd.space().label(0), "p_1:e");
  EXPECT_EQ(hd.space().label(3), "p_2:a");
  EXPECT_EQ(dual_groupoid_algebra(Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)}), q())
                .space(),
            hd.space());
}

TEST(Core, HopfCriteriaAgree) {
  struct Case {
    WeakHopf h;
    bool hopf;
  };
  const std::vector<Case> cases{{kz2_hopf(), true}, {kg_z2z2(), false}, {group_weak_z2(), false},
                                {kg_z2z2_dual(), false}};
  for (const auto& c : cases) {
    const HopfVerdict v = is_hopf(c.h);
    EXPECT_TRUE(v.consistent) << v.report.to_text();
    EXPECT_EQ(v.hopf, c.hopf);
    for (const auto& check : v.report.checks()) {
      if (check.name.rfind("criterion_", 0) == 0) EXPECT_EQ(check.passed, c.hopf) << check.name;
    }
  }
}

TEST(Core, CheckedFactoryRejectsBrokenStructures) {
  const WeakHopf h = kg_z2z2();
  LinMap s = h.antipode();
  s.set(2, 2, Scalar::integer(q(), 2));
  EXPECT_THROW(WeakHopf::checked(h.space(), h.mult(), h.unit(), h.comult(), h.counit(), s), AxiomFailure);
  EXPECT_NO_THROW(WeakHopf::unchecked(h.space(), h.mult(), h.unit(), h.comult(), h.counit(), s));
  EXPECT_NO_THROW(WeakHopf::checked(h.space(), h.mult(), h.unit(), h.comult(), h.counit(), h.antipode()));
}

TEST(Core, CommutativityFlags) {
  EXPECT_TRUE(commutativity(kg_z2z2()).passed);
  EXPECT_FALSE(commutativity(kg_z2s3()).passed);
  EXPECT_TRUE(cocommutativity(kg_z2s3()).passed);
  EXPECT_FALSE(cocommutativity(dual_weak_hopf(kg_z2s3())).passed);
}
