#pragma once

#include <optional>

#include "weakhopf/report.hpp"
#include "weakhopf/structure.hpp"
#include "weakhopf/subspace.hpp"

namespace weakhopf {

/// C with a coaction ρ: C → H⊗C meant to be both a comodule coalgebra and a
/// comodule algebra. C may carry an antipode.
struct ComoduleBialgebra {
  WeakHopf hopf;
  WeakBialgebra algebra;
  std::optional<LinMap> algebra_antipode;
  LinMap rho;
};

/// Coaction axioms, multiplicativity of ρ, ρ(1) ∈ H_s⊗C.
Report check_comodule_bialgebra(const ComoduleBialgebra& cb);

/// Maps on the ambient space C⊗H.
struct AmbientMaps {
  Space ambient;
  LinMap projector;  // c⊗h ↦ c⁰ ⊗ h₂ ε(c⁻¹h₁)
  LinMap comult;     // c⊗h ↦ c₁ ⊗ c₂⁻¹h₁ ⊗ c₂⁰ ⊗ h₂
  LinMap counit;     // c⊗h ↦ ε_C(c⁰) ε_H(c⁻¹h)
  LinMap mult;       // componentwise
  Vector unit;       // P(1⊗1)
  std::optional<LinMap> antipode;  // c⊗h ↦ P(S_C(c⁰) ⊗ S_H(c⁻¹h))
};
AmbientMaps ambient_maps(const ComoduleBialgebra& cb);

/// C × H with its structure in coordinates of an echelon basis of image(P).
struct SmashCoproduct {
  AmbientMaps ambient;
  Subspace subspace;
  LinMap inclusion;
  LinMap retraction;
  WeakBialgebra bialgebra;
  std::optional<WeakHopf> hopf;
  Report report;
};

/// Throws PreconditionError when ρ is not a comodule bialgebra structure, or when
/// the antipode is requested without a commutative H and an antipode on C.
/// Throws AxiomFailure when a structure map leaves C × H.
SmashCoproduct build_smash(const ComoduleBialgebra& cb, bool with_antipode);

/// The two counit splittings on all basis triples.
Report verify_counit_weakness(const WeakBialgebra& smash);
/// The two Δ(1) identities in (C×H)^{⊗3}.
Report verify_unit_weakness(const WeakBialgebra& smash);
/// The antipode axioms evaluated with the ambient maps on every basis element of C × H.
Report verify_smash_antipode(const SmashCoproduct& s);

}  // namespace weakhopf
