#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "weakhopf/scalar.hpp"

namespace weakhopf {

/// Finite-dimensional vector space with a named, ordered basis.
///
/// A space is an ordered list of factors; a plain space has one factor and
/// the ground field itself has none. Tensor products concatenate factor
/// lists, so (A⊗B)⊗C and A⊗(B⊗C) are the same value. Flattened indices
/// run with the rightmost factor fastest.
class Space {
 public:
  /// Throws PreconditionError on duplicate labels.
  static Space basis(const Field& field, std::vector<std::string> labels);
  /// Labels prefix0, prefix1, ...
  static Space indexed(const Field& field, std::size_t dim, const std::string& prefix = "e");
  /// The one-dimensional space of scalars.
  static Space scalars(const Field& field);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<std::string>& factor_labels(std::size_t k) const { return *factors_.at(k); }
  std::size_t factor_dim(std::size_t k) const { return factors_.at(k)->size(); }
  /// The k-th factor as a plain space.
  Space factor(std::size_t k) const;

  /// Per-factor coordinates of flat index i.
  std::vector<std::size_t> multi_index(std::size_t i) const;
  std::size_t flat_index(const std::vector<std::size_t>& multi) const;

  /// Factor labels joined with "⊗"; "1" for the scalars.
  std::string label(std::size_t i) const;
  /// Per-factor labels of flat index i.
  std::vector<std::string> label_tuple(std::size_t i) const;

  /// Same field and identical factor label lists.
  friend bool operator==(const Space& a, const Space& b);

  friend Space tensor_space(const Space& a, const Space& b);

 private:
  Space(Field field, std::vector<std::shared_ptr<const std::vector<std::string>>> factors);

  Field field_;
  std::vector<std::shared_ptr<const std::vector<std::string>>> factors_;
  std::size_t dim_ = 1;
};

/// a ⊗ b; throws FieldMismatch.
Space tensor_space(const Space& a, const Space& b);
/// space^{⊗n}; n = 0 gives the scalars.
Space tensor_power(const Space& space, std::size_t n);

}  // namespace weakhopf
