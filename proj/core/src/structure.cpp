#include "weakhopf/structure.hpp"

#include "weakhopf/axioms.hpp"
#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

void expect_map(const LinMap& f, const Space& dom, const Space& cod, const char* what) {
  if (f.cols() != dom.dim() || f.rows() != cod.dim() || f.field() != dom.field()) {
    throw ShapeMismatch(std::string(what) + " has the wrong shape");
  }
}

std::string first_failure(const Report& r) {
  const auto names = r.failed_names();
  return names.empty() ? std::string("axioms failed") : "axiom check failed: " + names.front();
}

}  // namespace

AxiomFailure::AxiomFailure(Report report) : std::runtime_error(first_failure(report)), report_(std::move(report)) {}

Coalgebra::Coalgebra(Space space, LinMap comult, LinMap counit)
    : space_(std::move(space)), comult_(std::move(comult)), counit_(std::move(counit)) {
  expect_map(comult_, space_, tensor_space(space_, space_), "comultiplication");
  expect_map(counit_, space_, Space::scalars(space_.field()), "counit");
}

Coalgebra Coalgebra::ground(const Field& field) {
  const Space k = Space::basis(field, {"1"});
  const LinMap delta = LinMap::from_int_rows(k, tensor_space(k, k), {{1}});
  return Coalgebra(k, delta, LinMap::from_int_rows(k, Space::scalars(field), {{1}}));
}

WeakBialgebra::WeakBialgebra(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit)
    : space_(std::move(space)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)) {
  const Space hh = tensor_space(space_, space_);
  expect_map(mult_, hh, space_, "multiplication");
  expect_map(comult_, space_, hh, "comultiplication");
  expect_map(counit_, space_, Space::scalars(space_.field()), "counit");
  if (unit_.size() != space_.dim()) throw ShapeMismatch("unit has the wrong dimension");
  mult_ = mult_.relabel(hh, space_);
  comult_ = comult_.relabel(space_, hh);
  counit_ = counit_.relabel(space_, Space::scalars(space_.field()));
  unit_ = Vector(space_, unit_.coords());
}

WeakBialgebra WeakBialgebra::unchecked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit) {
  return WeakBialgebra(std::move(space), std::move(mult), std::move(unit), std::move(comult), std::move(counit));
}

WeakBialgebra WeakBialgebra::checked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit) {
  WeakBialgebra out = unchecked(std::move(space), std::move(mult), std::move(unit), std::move(comult), std::move(counit));
  Report r = check_weak_bialgebra(out);
  if (!r.passed()) throw AxiomFailure(std::move(r));
  return out;
}

WeakHopf::WeakHopf(const WeakBialgebra& base, LinMap antipode) : WeakBialgebra(base), antipode_(std::move(antipode)) {
  expect_map(antipode_, space(), space(), "antipode");
  antipode_ = antipode_.relabel(space(), space());
}

WeakHopf WeakHopf::unchecked(const WeakBialgebra& base, LinMap antipode) { return WeakHopf(base, std::move(antipode)); }

WeakHopf WeakHopf::unchecked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit, LinMap antipode) {
  return WeakHopf(WeakBialgebra::unchecked(std::move(space), std::move(mult), std::move(unit), std::move(comult),
                                           std::move(counit)),
                  std::move(antipode));
}

WeakHopf WeakHopf::checked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit, LinMap antipode) {
  WeakHopf out = unchecked(std::move(space), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                           std::move(antipode));
  Report r = check_weak_bialgebra(out);
  r.merge(check_antipode(out));
  if (!r.passed()) throw AxiomFailure(std::move(r));
  return out;
}

}  // namespace weakhopf
