#pragma once

#include <vector>

#include "weakhopf/coaction.hpp"

namespace weakhopf {

enum class ActionKind { unchecked, partial, symmetric_partial };
std::string to_string(ActionKind kind);

/// Right action ↼: C ⊗ K → C of a weak Hopf algebra K on a coalgebra C.
class ModuleActionMap {
 public:
  /// Throws ShapeMismatch unless act maps C⊗K to C.
  ModuleActionMap(WeakHopf acting, Coalgebra c, LinMap act);

  const WeakHopf& acting() const { return k_; }
  const Coalgebra& coalgebra() const { return c_; }
  const LinMap& act() const { return act_; }
  ActionKind kind() const { return kind_; }

 private:
  WeakHopf k_;
  Coalgebra c_;
  LinMap act_;
  ActionKind kind_ = ActionKind::unchecked;

  friend ActionKind classify(ModuleActionMap& ma);
};

/// Unit, comultiplication compatibility and the deformed associativity
/// (c↼f)↼g = ε_C(c₁↼f₁)(c₂↼(f₂g)); with symmetric also (c₁↼(f₁g))ε_C(c₂↼f₂).
Report check_partial_action(const ModuleActionMap& ma, bool symmetric);
ActionKind classify(ModuleActionMap& ma);

/// c ↼ f = f(c⁻¹)c⁰, acting by H* on the dual basis. Throws PreconditionError
/// for an unclassified or non-partial coaction.
ModuleActionMap coaction_to_action(const CoactionMap& cm);

/// ρ(c) = Σ_i b_i ⊗ (c ↼ b_i*) for a basis (b_i) of H and its dual basis (b_i*)
/// of the acting algebra, in coordinates. Throws PreconditionError unless the
/// bases pair to the identity matrix.
CoactionMap action_to_coaction(const ModuleActionMap& ma, const WeakHopf& h, const std::vector<Vector>& basis,
                               const std::vector<Vector>& dual_basis);
/// Same with the standard basis of H and the coordinate dual basis.
CoactionMap action_to_coaction(const ModuleActionMap& ma, const WeakHopf& h);

/// c ↼ h = λ(h)c for λ in H* coordinates.
ModuleActionMap lambda_action(const WeakHopf& h, const Coalgebra& c, const Vector& lambda);

struct LambdaVerdict {
  bool holds = false;
  Report report;
};
/// λ(1)=1 and λ(h)λ(k) = λ(h₁)λ(h₂k) on all basis pairs.
LambdaVerdict check_lambda(const WeakHopf& h, const Vector& lambda);
/// check_lambda against rho_h_criteria on H* in partial mode; the symmetric
/// verdict is reported as information only.
Report lambda_equivalence(const WeakHopf& h, const Vector& lambda);

}  // namespace weakhopf
