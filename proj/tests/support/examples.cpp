#include "examples.hpp"

#include "weakhopf/dual.hpp"

namespace weakhopf::examples {

Field q() { return Field::rationals(); }

WeakHopf kg_z2z2() {
  return groupoid_algebra(Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)}), q());
}
WeakHopf kg_z2z2_dual() { return dual_weak_hopf(kg_z2z2()); }
WeakHopf kz2_hopf() { return groupoid_algebra(Groupoid::from_group(FiniteGroup::cyclic(2)), q()); }
WeakHopf group_weak_z2() { return abelian_group_weak_hopf(FiniteGroup::cyclic(2), q()); }
WeakHopf kg_z2s3() {
  return groupoid_algebra(Groupoid::disjoint_union({FiniteGroup::cyclic(2), FiniteGroup::symmetric3()}), q());
}

Vector vec(const Space& s, const std::vector<std::string>& coords) {
  std::vector<Scalar> out;
  for (const auto& c : coords) out.push_back(Scalar::parse(s.field(), c));
  return Vector(s, std::move(out));
}

CoactionMap rho_h_on_kz2(const std::vector<std::string>& h) {
  const WeakHopf hg = kg_z2z2();
  CoactionMap cm = rho_h_coaction(hg, kz2_hopf().coalgebra(), vec(hg.space(), h));
  classify(cm);
  return cm;
}

CoactionMap g1_translation() {
  const WeakHopf hd = kg_z2z2_dual();
  const Coalgebra c = kz2_hopf().coalgebra();
  // dual basis order p_1:e, p_2:e, p_1:a, p_2:a; C basis e, a
  const LinMap rho = LinMap::from_int_rows(c.space(), tensor_space(hd.space(), c.space()),
                                           {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 1}, {1, 0}, {0, 0}, {0, 0}});
  CoactionMap cm(hd, c, rho);
  classify(cm);
  return cm;
}

LinMap projection_onto(std::size_t l) {
  const Space s = kz2_hopf().space();
  LinMap pi(s, s);
  pi.set(l, l, Scalar::one(s.field()));
  return pi;
}

std::vector<Vector> lambda_candidates() {
  const Space s = kg_z2z2_dual().space();
  return {vec(s, {"1", "0", "0", "0"}), vec(s, {"0", "1", "0", "0"}), vec(s, {"1", "0", "1", "0"}),
          vec(s, {"1", "1", "0", "0"}), vec(s, {"1", "0", "-1", "0"}), vec(s, {"1", "0", "0", "1"}),
          vec(s, {"1/2", "0", "0", "0"})};
}

ComoduleBialgebra running_smash_input() {
  const WeakHopf h = kg_z2z2();
  const WeakHopf c = kz2_hopf();
  const CoactionMap cm = rho_h_coaction(h, c.coalgebra(), vec(h.space(), {"1", "0", "0", "0"}));
  return ComoduleBialgebra{h, c, c.antipode(), cm.rho()};
}

}  // namespace weakhopf::examples
