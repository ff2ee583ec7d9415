#include <gtest/gtest.h>

#include "weakhopf/errors.hpp"
#include "weakhopf/linmap.hpp"
#include "weakhopf/report.hpp"
#include "weakhopf/subspace.hpp"

using namespace weakhopf;

namespace {

Field q() { return Field::rationals(); }
Scalar s(const std::string& t, const Field& f = Field::rationals()) { return Scalar::parse(f, t); }

LinMap dense(const Space& dom, const Space& cod, const std::vector<std::vector<long>>& rows) {
  return LinMap::from_int_rows(dom, cod, rows);
}

}  // namespace

TEST(Scalar, RationalsStayReduced) {
  EXPECT_EQ(s("6/-4").to_string(), "-3/2");
  EXPECT_EQ((s("1/3") + s("1/6")).to_string(), "1/2");
  EXPECT_EQ((s("2/3") * s("3/2")).to_string(), "1");
  EXPECT_EQ(s("0/5").to_string(), "0");
  EXPECT_TRUE((s("7/9") - s("7/9")).is_zero());
  EXPECT_EQ(s("-5/7").inverse().to_string(), "-7/5");
}

TEST(Scalar, ParseRejectsGarbage) {
  EXPECT_THROW(s("1/0"), ParseError);
  EXPECT_THROW(s("1.5"), ParseError);
  EXPECT_THROW(s(""), ParseError);
  EXPECT_THROW(s("x"), ParseError);
  EXPECT_ANY_THROW(Scalar::zero(q()).inverse());
}

TEST(Scalar, PrimeFieldMatchesFermatInverse) {
  const Field f7 = Field::prime(7);
  for (long a = 1; a < 7; ++a) {
    Scalar pw = Scalar::one(f7);
    for (int i = 0; i < 5; ++i) pw *= Scalar::integer(f7, a);  // a^(p-2)
    EXPECT_EQ(Scalar::integer(f7, a).inverse(), pw);
  }
  EXPECT_EQ(Scalar::parse(f7, "1/2").to_string(), "4");
  EXPECT_EQ(Scalar::integer(f7, -1).to_string(), "6");
  EXPECT_THROW(Scalar::parse(f7, "1/7"), ParseError);
  EXPECT_THROW(Field::prime(9), PreconditionError);
}

TEST(Scalar, FieldsDoNotMix) {
  EXPECT_THROW(Scalar::one(q()) + Scalar::one(Field::prime(5)), FieldMismatch);
  EXPECT_FALSE(Scalar::one(q()) == Scalar::one(Field::prime(5)));
}

TEST(Space, TensorIsAssociativeAndRightmostFastest) {
  const Space a = Space::basis(q(), {"x", "y"});
  const Space b = Space::basis(q(), {"u", "v", "w"});
  const Space ab = tensor_space(a, b);
  EXPECT_EQ(ab.dim(), 6u);
  EXPECT_EQ(ab.label(1), "x⊗v");
  EXPECT_EQ(ab.label(3), "y⊗u");
  EXPECT_EQ(ab.multi_index(5), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(ab.flat_index({1, 1}), 4u);
  EXPECT_EQ(tensor_space(ab, a), tensor_space(a, tensor_space(b, a)));
  EXPECT_EQ(tensor_space(Space::scalars(q()), a), a);
  EXPECT_EQ(Space::scalars(q()).label(0), "1");
  EXPECT_THROW(Space::basis(q(), {"x", "x"}), PreconditionError);
  EXPECT_THROW(tensor_space(a, Space::indexed(Field::prime(3), 2)), FieldMismatch);
}

TEST(LinMap, CompositionMatchesHandProduct) {
  const Space v2 = Space::indexed(q(), 2);
  const Space v3 = Space::indexed(q(), 3, "f");
  const LinMap f = dense(v2, v3, {{1, 2}, {0, -1}, {3, 0}});
  const LinMap g = dense(v2, v2, {{0, 1}, {1, 1}});
  const LinMap fg = f * g;
  EXPECT_TRUE(maps_equal(fg, dense(v2, v3, {{2, 3}, {-1, -1}, {0, 3}})));
  EXPECT_THROW(g * f, ShapeMismatch);
  EXPECT_TRUE(maps_equal(f * LinMap::identity(v2), f));
}

TEST(LinMap, KroneckerAgreesWithEntrywiseFormula) {
  const Space v2 = Space::indexed(q(), 2);
  const Space v3 = Space::indexed(q(), 3, "f");
  const LinMap f = dense(v2, v3, {{1, 2}, {0, -1}, {3, 0}});
  const LinMap g = dense(v3, v2, {{1, 0, 4}, {2, -2, 0}});
  const LinMap fg = tensor_map(f, g);
  for (std::size_t r1 = 0; r1 < 3; ++r1)
    for (std::size_t r2 = 0; r2 < 2; ++r2)
      for (std::size_t c1 = 0; c1 < 2; ++c1)
        for (std::size_t c2 = 0; c2 < 3; ++c2) {
          EXPECT_EQ(fg.at(r1 * 2 + r2, c1 * 3 + c2), f.at(r1, c1) * g.at(r2, c2));
        }
  EXPECT_TRUE(maps_equal(tensor_maps({f, g, f}), tensor_map(tensor_map(f, g), f)));
}

TEST(LinMap, FlipAndPermutationMoveFactors) {
  const Space a = Space::basis(q(), {"x", "y"});
  const Space b = Space::basis(q(), {"u", "v", "w"});
  const Vector va = Vector::basis(a, 1);
  const Vector vb = Vector::basis(b, 2);
  EXPECT_EQ(flip(a, b).apply(tensor_vector(va, vb)), tensor_vector(vb, va));
  const LinMap p = permute_factors({a, b, a}, {2, 0, 1});
  const Vector va0 = Vector::basis(a, 0);
  EXPECT_EQ(p.apply(tensor_vector(tensor_vector(va, vb), va0)), tensor_vector(tensor_vector(va0, va), vb));
  EXPECT_TRUE(maps_equal(flip(b, a) * flip(a, b), LinMap::identity(tensor_space(a, b))));
}

TEST(LinMap, WitnessNamesFirstDifferingTuple) {
  const Space a = Space::basis(q(), {"x", "y"});
  const LinMap id = LinMap::identity(tensor_space(a, a));
  LinMap bad = id;
  bad.set(2, 2, Scalar::integer(q(), 5));
  const Check c = compare_maps("same", bad, id);
  ASSERT_FALSE(c.passed);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->tuple, (std::vector<std::string>{"y", "x"}));
  ASSERT_EQ(c.witness->lhs.size(), 1u);
  EXPECT_EQ(c.witness->lhs[0].coeff, "5");
  EXPECT_EQ(first_difference(bad, id), 2u);
}

TEST(Subspace, EchelonBasisAndRetraction) {
  const Space v = Space::indexed(q(), 4);
  const Subspace sub = Subspace::span(v, {Vector::from_ints(v, {0, 2, 2, 0}), Vector::from_ints(v, {0, 1, 1, 0}),
                                          Vector::from_ints(v, {1, 0, 0, 1})});
  ASSERT_EQ(sub.dim(), 2u);
  EXPECT_EQ(sub.pivots(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(sub.basis()[0], Vector::from_ints(v, {1, 0, 0, 1}));
  EXPECT_EQ(sub.basis()[1], Vector::from_ints(v, {0, 1, 1, 0}));
  EXPECT_TRUE(sub.contains(Vector::from_ints(v, {3, -1, -1, 3})));
  EXPECT_FALSE(sub.contains(Vector::from_ints(v, {0, 0, 1, 0})));
  const Space cs = sub.coordinate_space();
  EXPECT_TRUE(maps_equal(sub.retraction(cs) * sub.inclusion(cs), LinMap::identity(cs)));
  EXPECT_EQ(rank(dense(v, v, {{1, 1, 0, 0}, {2, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}})), 2u);
}

TEST(Subspace, TensorSubspaceDimensionMultiplies) {
  const Space v = Space::indexed(q(), 3);
  const Subspace a = Subspace::span(v, {Vector::from_ints(v, {1, 1, 0})});
  const Subspace b = Subspace::span(v, {Vector::from_ints(v, {1, 0, 0}), Vector::from_ints(v, {0, 0, 1})});
  EXPECT_EQ(tensor_subspace(a, b).dim(), 2u);
  EXPECT_TRUE(tensor_subspace(a, b).contains(tensor_vector(a.basis()[0], Vector::from_ints(v, {2, 0, 3}))));
}

TEST(Report, JsonIsDeterministicAndCountsInformationalSeparately) {
  Report r("subject");
  r.add(pass("a"));
  Check i = verdict("b", false, "note");
  i.informational = true;
  r.add(i);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.to_json(), r.to_json());
  EXPECT_EQ(r.to_json().find("seconds"), std::string::npos);
  r.add(verdict("c", false, "broken"));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failed_names(), (std::vector<std::string>{"c"}));
  Report outer;
  outer.merge(r, "inner");
  EXPECT_TRUE(outer.find("inner.c"));
}
