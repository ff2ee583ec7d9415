#pragma once

#include <string>
#include <vector>

#include "weakhopf/report.hpp"
#include "weakhopf/structure.hpp"
#include "weakhopf/subspace.hpp"

namespace weakhopf {

enum class CoactionKind { unchecked, global, partial, symmetric_partial };
std::string to_string(CoactionKind kind);

/// Left coaction ρ: C → H ⊗ C.
class CoactionMap {
 public:
  /// Throws ShapeMismatch unless rho maps C to H⊗C.
  CoactionMap(WeakHopf h, Coalgebra c, LinMap rho);

  const WeakHopf& hopf() const { return h_; }
  const Coalgebra& coalgebra() const { return c_; }
  const LinMap& rho() const { return rho_; }
  CoactionKind kind() const { return kind_; }

 private:
  WeakHopf h_;
  Coalgebra c_;
  LinMap rho_;
  CoactionKind kind_ = CoactionKind::unchecked;

  friend CoactionKind classify(CoactionMap& cm);
};

/// Counit, comultiplication, coassociativity and target-map compatibility of ρ.
Report check_global_coaction(const CoactionMap& cm);
/// Counit and comultiplication compatibility plus the deformed coassociativity;
/// with symmetric also its right-handed variant.
Report check_partial_coaction(const CoactionMap& cm, bool symmetric);
/// Runs the checkers and records the strongest kind that holds.
CoactionKind classify(CoactionMap& cm);

/// (I⊗ε_C)ρ = (ε_t⊗ε_C)ρ.
Check globality_criterion(const CoactionMap& cm);
/// Passes unless ρ satisfies the first three global axioms but not the target-map one.
Check target_axiom_redundancy(const CoactionMap& cm);
/// Partial check plus criterion must agree with the global check.
Check globality_equivalence(const CoactionMap& cm);

enum class RhoMode { global, partial, symmetric };
std::string to_string(RhoMode mode);
/// Parses "global", "partial" or "symmetric"; throws PreconditionError.
RhoMode parse_rho_mode(const std::string& text);

/// ρ_h(c) = h ⊗ c.
CoactionMap rho_h_coaction(const WeakHopf& h, const Coalgebra& c, const Vector& element);

struct RhoHVerdict {
  bool holds = false;
  Report report;
};
/// Element conditions for ρ_h, cross-checked against the coaction checker on the
/// one-dimensional coalgebra.
RhoHVerdict rho_h_criteria(const WeakHopf& h, const Vector& element, RhoMode mode);

struct CandidateSpec {
  enum class Family { basis, uniform_subsets, subset_sums, list };
  Family family = Family::basis;
  std::vector<Vector> list;
};
/// Parses "basis", "uniform-subsets" or "subset-sums"; throws PreconditionError.
CandidateSpec::Family parse_candidate_family(const std::string& text);
/// Candidates in generation order (subsets by increasing bitmask).
std::vector<Vector> generate_candidates(const WeakHopf& h, const CandidateSpec& spec);
/// Candidates satisfying rho_h_criteria in the given mode, without duplicates.
std::vector<Vector> scan_rho_h(const WeakHopf& h, const CandidateSpec& spec, RhoMode mode);

/// Idempotent π: C → C whose image D is a subcoalgebra.
class CoalgebraProjection {
 public:
  /// Throws PreconditionError when check_projection fails.
  static CoalgebraProjection make(const Coalgebra& c, const LinMap& pi);

  const Coalgebra& coalgebra() const { return c_; }
  const LinMap& pi() const { return pi_; }
  const Subspace& image() const { return d_; }
  /// D with its own basis, structure maps transported along inclusion and retraction.
  const Coalgebra& sub() const { return sub_; }
  LinMap inclusion() const { return d_.inclusion(sub_.space()); }
  LinMap retraction() const { return d_.retraction(sub_.space()); }

 private:
  CoalgebraProjection(Coalgebra c, LinMap pi, Subspace d, Coalgebra sub)
      : c_(std::move(c)), pi_(std::move(pi)), d_(std::move(d)), sub_(std::move(sub)) {}
  Coalgebra c_;
  LinMap pi_;
  Subspace d_;
  Coalgebra sub_;
};

/// projection_idempotent, image_subcoalgebra.
Report check_projection(const Coalgebra& c, const LinMap& pi);

struct InducedCoaction {
  CoactionMap coaction;
  Report report;
};
/// ρ̄ = (I⊗π)ρ on D. Throws PreconditionError unless cm is global.
InducedCoaction induce_partial_coaction(const CoactionMap& cm, const CoalgebraProjection& proj);

/// H as a coalgebra coacted on by H*: c ↦ Σ_i h_i* ⊗ c·h_i.
CoactionMap dual_basis_coaction(const WeakHopf& h);

}  // namespace weakhopf
