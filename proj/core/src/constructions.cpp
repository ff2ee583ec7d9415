#include "weakhopf/constructions.hpp"

#include "weakhopf/dual.hpp"
#include "weakhopf/errors.hpp"

namespace weakhopf {

WeakHopf groupoid_algebra(const Groupoid& g, const Field& field) {
  const std::size_t n = g.size();
  const Space h = Space::basis(field, g.arrows());
  const Space hh = tensor_space(h, h);
  const Scalar one = Scalar::one(field);

  LinMap mult(hh, h);
  LinMap comult(h, hh);
  LinMap antipode(h, h);
  std::vector<Scalar> unit(n, Scalar::zero(field));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (auto ab = g.compose(a, b)) mult.set(*ab, a * n + b, one);
    }
    comult.set(a * n + a, a, one);
    antipode.set(g.inverse(a), a, one);
    if (g.is_identity(a)) unit[a] = one;
  }
  const LinMap counit = LinMap::functional(Vector(h, std::vector<Scalar>(n, one)));
  return WeakHopf::unchecked(h, std::move(mult), Vector(h, std::move(unit)), std::move(comult), counit,
                             std::move(antipode));
}

WeakHopf dual_groupoid_algebra(const Groupoid& g, const Field& field) {
  const std::size_t n = g.size();
  std::vector<std::string> labels;
  for (const auto& a : g.arrows()) labels.push_back("p_" + a);
  const Space h = Space::basis(field, labels);
  const Space hh = tensor_space(h, h);
  const Scalar one = Scalar::one(field);

  LinMap mult(hh, h);
  LinMap comult(h, hh);
  LinMap antipode(h, h);
  std::vector<Scalar> counit(n, Scalar::zero(field));
  for (std::size_t a = 0; a < n; ++a) {
    mult.set(a, a * n + a, one);
    for (std::size_t b = 0; b < n; ++b) {
      if (auto ab = g.compose(a, b)) comult.set(a * n + b, *ab, one);
    }
    antipode.set(g.inverse(a), a, one);
    if (g.is_identity(a)) counit[a] = one;
  }
  return WeakHopf::unchecked(h, std::move(mult), Vector(h, std::vector<Scalar>(n, one)), std::move(comult),
                             LinMap::functional(Vector(h, std::move(counit))), std::move(antipode));
}

WeakHopf abelian_group_weak_hopf(const FiniteGroup& g, const Field& field) {
  if (!g.is_abelian()) throw PreconditionError("the group is not abelian");
  const std::size_t n = g.order();
  if (!field.is_rational() && n % field.characteristic() == 0) {
    throw PreconditionError("the characteristic " + std::to_string(field.characteristic()) + " divides |G| = " +
                            std::to_string(n));
  }
  const Space h = Space::basis(field, g.elements());
  const Space hh = tensor_space(h, h);
  const Scalar one = Scalar::one(field);
  const Scalar weight = Scalar::fraction(field, 1, static_cast<long>(n));

  LinMap mult(hh, h);
  LinMap comult(h, hh);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mult.set(g.mul(a, b), a * n + b, one);
      comult.set(g.mul(a, b) * n + g.inverse(b), a, weight);
    }
  }
  std::vector<Scalar> counit(n, Scalar::zero(field));
  counit[g.identity()] = Scalar::integer(field, static_cast<long>(n));
  return WeakHopf::unchecked(h, std::move(mult), Vector::basis(h, g.identity()), std::move(comult),
                             LinMap::functional(Vector(h, std::move(counit))), LinMap::identity(h));
}

}  // namespace weakhopf

namespace weakhopf {

WeakHopf ground_hopf(const Field& field) {
  const Space k = Space::basis(field, {"1"});
  const Space kk = tensor_space(k, k);
  return WeakHopf::unchecked(k, LinMap::from_int_rows(kk, k, {{1}}), Vector::from_ints(k, {1}),
                             LinMap::from_int_rows(k, kk, {{1}}), LinMap::from_int_rows(k, Space::scalars(field), {{1}}),
                             LinMap::identity(k));
}

}  // namespace weakhopf
