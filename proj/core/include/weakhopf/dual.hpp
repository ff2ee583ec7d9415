#pragma once

#include "weakhopf/structure.hpp"

namespace weakhopf {

/// Dual basis {p_x}: label x becomes "p_x".
Space dual_space(const Space& space);

/// H* on the dual basis: convolution product, unit ε, coproduct mᵀ,
/// counit evaluation at 1, antipode Sᵀ.
WeakHopf dual_weak_hopf(const WeakHopf& wh);

}  // namespace weakhopf
