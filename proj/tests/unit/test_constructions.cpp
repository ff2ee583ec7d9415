#include <gtest/gtest.h>

#include "examples.hpp"
#include "weakhopf/axioms.hpp"
#include "weakhopf/dual.hpp"
#include "weakhopf/errors.hpp"

using namespace weakhopf;
using namespace weakhopf::examples;

TEST(Groupoid, DisjointUnionOrderAndLabels) {
  const Groupoid g = Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)});
  EXPECT_EQ(g.arrows(), (std::vector<std::string>{"1:e", "2:e", "1:a", "2:a"}));
  EXPECT_EQ(g.identities(), (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(g.compose(2, 3));
  EXPECT_EQ(g.compose(2, 2), 0u);
  EXPECT_TRUE(check_groupoid(g).passed());
}

TEST(Groupoid, RawTableIsCanonicalised) {
  const Groupoid g = Groupoid::from_table({"b", "a", "y", "x"}, {"x", "y"},
                                          {{"x", "x", "x"},
                                           {"y", "y", "y"},
                                           {"x", "a", "a"},
                                           {"a", "y", "a"},
                                           {"y", "b", "b"},
                                           {"b", "x", "b"},
                                           {"a", "b", "x"},
                                           {"b", "a", "y"}});
  EXPECT_EQ(g.arrows(), (std::vector<std::string>{"x", "y", "a", "b"}));
  EXPECT_EQ(g.inverse(2), 3u);
  EXPECT_EQ(g.source(2), 1u);
  EXPECT_EQ(g.target(2), 0u);
  EXPECT_TRUE(check_weak_hopf(groupoid_algebra(g, q())).passed());
}

TEST(Groupoid, InvalidTablesAreRejected) {
  // missing inverse
  EXPECT_THROW(Groupoid::from_table({"e", "a"}, {"e"}, {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}}),
               PreconditionError);
  // wrong declared identity
  EXPECT_THROW(Groupoid::from_table({"e", "a"}, {"a"},
                                    {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}, {"a", "a", "e"}}),
               PreconditionError);
  // non-associative magma on three elements with identity e
  EXPECT_THROW(Groupoid::from_table({"e", "a", "b"}, {"e"},
                                    {{"e", "e", "e"},
                                     {"e", "a", "a"},
                                     {"e", "b", "b"},
                                     {"a", "e", "a"},
                                     {"b", "e", "b"},
                                     {"a", "a", "e"},
                                     {"b", "b", "e"},
                                     {"a", "b", "a"},
                                     {"b", "a", "b"}}),
               PreconditionError);
}

TEST(FiniteGroup, NamedGroups) {
  EXPECT_TRUE(FiniteGroup::named("z3").is_abelian());
  EXPECT_FALSE(FiniteGroup::named("s3").is_abelian());
  EXPECT_THROW(FiniteGroup::named("q8"), PreconditionError);
}

TEST(Constructions, GroupoidAlgebraStructureConstants) {
  const WeakHopf h = kg_z2z2();
  EXPECT_EQ(h.unit(), vec(h.space(), {"1", "1", "0", "0"}));
  // δ_{1:a}δ_{2:a} = 0, δ_{1:a}δ_{1:a} = δ_{1:e}
  EXPECT_TRUE(h.mult().column(2 * 4 + 3).is_zero());
  EXPECT_EQ(h.mult().column(2 * 4 + 2), Vector::basis(h.space(), 0));
  for (std::size_t g = 0; g < 4; ++g) {
    EXPECT_EQ(h.comult().column(g), tensor_vector(Vector::basis(h.space(), g), Vector::basis(h.space(), g)));
    EXPECT_TRUE(h.counit().at(0, g).is_one());
  }
}

TEST(Constructions, LargerGroupoidPassesSuite) {
  const Report r = check_weak_hopf(kg_z2s3());
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(check_weak_hopf(dual_weak_hopf(kg_z2s3())).passed());
}

TEST(Constructions, DualGroupoidAlgebraMatchesDualOfAlgebra) {
  const Groupoid g = Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::symmetric3()});
  const WeakHopf a = dual_groupoid_algebra(g, q());
  const WeakHopf b = dual_weak_hopf(groupoid_algebra(g, q()));
  EXPECT_TRUE(maps_equal(a.mult(), b.mult()));
  EXPECT_TRUE(maps_equal(a.comult(), b.comult()));
  EXPECT_TRUE(maps_equal(a.antipode(), b.antipode()));
  EXPECT_EQ(a.unit(), b.unit());
}

TEST(Constructions, GroupWeakHopfMatchesPrintedValues) {
  const WeakHopf h = group_weak_z2();
  EXPECT_EQ(h.counit().at(0, 0).to_string(), "2");
  EXPECT_TRUE(h.counit().at(0, 1).is_zero());
  const CounitalPair cp = counital_maps(h);
  EXPECT_TRUE(maps_equal(cp.target, LinMap::identity(h.space())));
  EXPECT_TRUE(maps_equal(cp.source, LinMap::identity(h.space())));
  EXPECT_TRUE(maps_equal(h.antipode(), LinMap::identity(h.space())));
  EXPECT_TRUE(check_weak_hopf(h).passed());
  // Δ(g) = (1/|G|) Σ_k gk ⊗ k⁻¹
  EXPECT_EQ(h.comult().column(1), vec(tensor_space(h.space(), h.space()), {"0", "1/2", "1/2", "0"}));
}

TEST(Constructions, GroupWeakHopfForLargerAbelianGroup) {
  const WeakHopf h = abelian_group_weak_hopf(FiniteGroup::cyclic(3), q());
  EXPECT_EQ(h.counit().at(0, 0).to_string(), "3");
  EXPECT_TRUE(check_weak_hopf(h).passed());
  EXPECT_FALSE(is_hopf(h).hopf);
}

TEST(Constructions, GroupWeakHopfPreconditions) {
  EXPECT_THROW(abelian_group_weak_hopf(FiniteGroup::symmetric3(), q()), PreconditionError);
  EXPECT_THROW(abelian_group_weak_hopf(FiniteGroup::cyclic(2), Field::prime(2)), PreconditionError);
  EXPECT_NO_THROW(abelian_group_weak_hopf(FiniteGroup::cyclic(2), Field::prime(3)));
}

TEST(Constructions, GroundHopfIsOneDimensionalHopf) {
  const WeakHopf k = ground_hopf(q());
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(check_weak_hopf(k).passed());
  EXPECT_TRUE(is_hopf(k).hopf);
}
