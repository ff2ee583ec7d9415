#pragma once

#include <cstddef>

#include "weakhopf/linmap.hpp"

namespace weakhopf {

/// The algebra A^{⊗n} with componentwise product, built from m: A⊗A → A.
/// Products are expanded term by term, so no map on A^{⊗2n} is ever formed.
class TensorAlgebra {
 public:
  TensorAlgebra(const LinMap& mult, std::size_t power);

  const Space& space() const { return space_; }
  Vector multiply(const Vector& a, const Vector& b) const;
  /// x ↦ w·x on A^{⊗n}.
  LinMap left_multiplication(const Vector& w) const;
  /// x ↦ x·w on A^{⊗n}.
  LinMap right_multiplication(const Vector& w) const;

 private:
  LinMap mult_;
  std::size_t power_;
  std::size_t base_dim_;
  Space space_;
};

}  // namespace weakhopf
