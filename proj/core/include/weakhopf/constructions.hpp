#pragma once

#include "weakhopf/groupoid.hpp"
#include "weakhopf/structure.hpp"

namespace weakhopf {

/// kG on {δ_g}: δ_gδ_h = δ_{gh} when composable, Δ(δ_g)=δ_g⊗δ_g, ε(δ_g)=1, S(δ_g)=δ_{g⁻¹}.
WeakHopf groupoid_algebra(const Groupoid& g, const Field& field);

/// (kG)* on {p_g}: p_g p_h = [g=h] p_g, Δ(p_g) = Σ_{ab=g} p_a⊗p_b, ε(p_g)=[g∈G₀], S(p_g)=p_{g⁻¹}.
WeakHopf dual_groupoid_algebra(const Groupoid& g, const Field& field);

/// kG for abelian G with Δ(g) = |G|⁻¹ Σ_h gh⊗h⁻¹, ε(g) = |G|[g=e], S = id.
/// Throws PreconditionError for non-abelian G or when char k divides |G|.
WeakHopf abelian_group_weak_hopf(const FiniteGroup& g, const Field& field);

}  // namespace weakhopf

namespace weakhopf {

/// The ground field as a one-dimensional Hopf algebra on the basis {1}.
WeakHopf ground_hopf(const Field& field);

}  // namespace weakhopf
