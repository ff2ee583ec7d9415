#pragma once

#include <optional>
#include <stdexcept>

#include "weakhopf/linmap.hpp"
#include "weakhopf/report.hpp"

namespace weakhopf {

/// A build refused because axioms failed; carries the failing report.
class AxiomFailure : public std::runtime_error {
 public:
  explicit AxiomFailure(Report report);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// (C, Δ, ε). Shapes are validated on construction, axioms are not.
class Coalgebra {
 public:
  Coalgebra(Space space, LinMap comult, LinMap counit);

  const Space& space() const { return space_; }
  const Field& field() const { return space_.field(); }
  std::size_t dim() const { return space_.dim(); }
  const LinMap& comult() const { return comult_; }
  const LinMap& counit() const { return counit_; }

  /// The one-dimensional coalgebra k with Δ(1)=1⊗1, ε(1)=1.
  static Coalgebra ground(const Field& field);

 private:
  Space space_;
  LinMap comult_;
  LinMap counit_;
};

/// (H, m, u, Δ, ε).
class WeakBialgebra {
 public:
  /// Validates shapes only, so broken structures can exist for negative tests.
  static WeakBialgebra unchecked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit);
  /// Throws AxiomFailure unless check_weak_bialgebra passes.
  static WeakBialgebra checked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit);

  const Space& space() const { return space_; }
  const Field& field() const { return space_.field(); }
  std::size_t dim() const { return space_.dim(); }
  const LinMap& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }
  /// k → H, 1 ↦ 1_H.
  LinMap unit_map() const { return LinMap::constant(unit_); }
  const LinMap& comult() const { return comult_; }
  const LinMap& counit() const { return counit_; }
  Coalgebra coalgebra() const { return Coalgebra(space_, comult_, counit_); }

 protected:
  WeakBialgebra(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit);

 private:
  Space space_;
  LinMap mult_;
  Vector unit_;
  LinMap comult_;
  LinMap counit_;
};

/// A weak bialgebra with an antipode.
class WeakHopf : public WeakBialgebra {
 public:
  static WeakHopf unchecked(const WeakBialgebra& base, LinMap antipode);
  static WeakHopf unchecked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit, LinMap antipode);
  /// Throws AxiomFailure unless the bialgebra and antipode axioms pass.
  static WeakHopf checked(Space space, LinMap mult, Vector unit, LinMap comult, LinMap counit, LinMap antipode);

  const LinMap& antipode() const { return antipode_; }

 private:
  WeakHopf(const WeakBialgebra& base, LinMap antipode);
  LinMap antipode_;
};

}  // namespace weakhopf
