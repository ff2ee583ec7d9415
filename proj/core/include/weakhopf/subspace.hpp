#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weakhopf/linmap.hpp"

namespace weakhopf {

/// Subspace of an ambient space, held by its reduced row-echelon basis.
class Subspace {
 public:
  /// Span of arbitrary vectors of the ambient space.
  static Subspace span(const Space& ambient, const std::vector<Vector>& vectors);
  /// Column space of f.
  static Subspace image(const LinMap& f);

  const Space& ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Ambient index of the leading entry of each basis vector.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Every column of f lies in the subspace; returns the first offending column otherwise.
  std::optional<std::size_t> first_column_outside(const LinMap& f) const;
  /// Coordinates of v in the echelon basis, or nothing if v is outside.
  std::optional<std::vector<Scalar>> coordinates(const Vector& v) const;

  /// Abstract space of dimension dim() with labels prefix0, prefix1, ...
  Space coordinate_space(const std::string& prefix = "b") const;
  /// coordinate space → ambient.
  LinMap inclusion(const Space& coords) const;
  /// ambient → coordinate space, reading pivot entries; a left inverse of inclusion.
  LinMap retraction(const Space& coords) const;

 private:
  Subspace(Space ambient, std::vector<Vector> basis, std::vector<std::size_t> pivots)
      : ambient_(std::move(ambient)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Space ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Subspace spanned by all v ⊗ w with v in a, w in b.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

std::size_t rank(const LinMap& f);

}  // namespace weakhopf
