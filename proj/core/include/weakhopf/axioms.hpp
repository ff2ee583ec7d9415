#pragma once

#include "weakhopf/report.hpp"
#include "weakhopf/structure.hpp"
#include "weakhopf/subspace.hpp"

namespace weakhopf {

/// ε_t, ε_s and their images.
struct CounitalPair {
  LinMap target;  // h ↦ ε(1₁h)1₂
  LinMap source;  // h ↦ 1₁ε(h1₂)
  Subspace target_algebra;
  Subspace source_algebra;
};

Report check_coalgebra(const Coalgebra& c);
/// Associativity, unit, coalgebra axioms and the three weak bialgebra axioms.
Report check_weak_bialgebra(const WeakBialgebra& wb);
/// ε(hkl) = ε(hk₁)ε(k₂l) = ε(hk₂)ε(k₁l) on all basis triples.
Report check_counit_weakness(const WeakBialgebra& wb);
/// (1⊗Δ1)(Δ1⊗1) = (Δ1⊗1)(1⊗Δ1) = (Δ⊗I)Δ(1).
Report check_unit_weakness(const WeakBialgebra& wb);
CounitalPair counital_maps(const WeakBialgebra& wb);

/// The three antipode axioms.
Report check_antipode(const WeakHopf& wh);
/// Consequences of the weak bialgebra axioms (absorption, counital map identities, ...).
Report check_bialgebra_identities(const WeakBialgebra& wb);
/// Identities that involve the antipode.
Report check_antipode_identities(const WeakHopf& wh);
/// Both identity families.
Report check_identity_suite(const WeakHopf& wh);
/// Bialgebra axioms, antipode axioms and the identity suite.
Report check_weak_hopf(const WeakHopf& wh);

struct HopfVerdict {
  bool hopf = false;
  /// All five criteria agree.
  bool consistent = false;
  Report report;
};
/// Evaluates the five equivalent Hopf criteria.
HopfVerdict is_hopf(const WeakHopf& wh);

Check commutativity(const WeakBialgebra& wb);
Check cocommutativity(const WeakBialgebra& wb);

}  // namespace weakhopf
