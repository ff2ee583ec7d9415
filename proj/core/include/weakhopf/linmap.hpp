#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "weakhopf/scalar.hpp"
#include "weakhopf/space.hpp"

namespace weakhopf {

/// Dense coordinate vector in a Space.
class Vector {
 public:
  /// Throws ShapeMismatch if the coordinate count differs from the dimension.
  Vector(Space space, std::vector<Scalar> coords);

  static Vector zero(const Space& space);
  static Vector basis(const Space& space, std::size_t i);
  /// Coordinates given as small integers.
  static Vector from_ints(const Space& space, const std::vector<long>& coords);

  const Space& space() const { return space_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  Vector scaled(const Scalar& s) const;

  /// Coordinates compared exactly; spaces compared by dimension.
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  Space space_;
  std::vector<Scalar> coords_;
};

/// v ⊗ w in tensor_space(v.space(), w.space()).
Vector tensor_vector(const Vector& v, const Vector& w);

/// Linear map between two spaces, stored as sparse exact columns
/// (one column per domain basis vector, entries sorted by row, no zeros).
class LinMap {
 public:
  struct Entry {
    std::size_t row;
    Scalar value;
  };
  using Column = std::vector<Entry>;

  /// The zero map. Throws FieldMismatch.
  LinMap(Space domain, Space codomain);

  static LinMap identity(const Space& space);
  /// k → V, 1 ↦ v.
  static LinMap constant(const Vector& v);
  /// V → k with the given values on basis vectors.
  static LinMap functional(const Vector& values);
  static LinMap from_columns(const Space& domain, const Space& codomain, const std::vector<Vector>& columns);
  static LinMap from_function(const Space& domain, const Space& codomain,
                              const std::function<Vector(std::size_t)>& image_of_basis);
  /// Rows given as small integers (codomain.dim() rows of domain.dim() entries).
  static LinMap from_int_rows(const Space& domain, const Space& codomain, const std::vector<std::vector<long>>& rows);

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const Field& field() const { return domain_.field(); }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }

  Scalar at(std::size_t row, std::size_t col) const;
  /// Overwrites one coefficient.
  void set(std::size_t row, std::size_t col, const Scalar& value);
  const Column& column_entries(std::size_t col) const { return columns_.at(col); }
  /// Replaces a column; entries must be sorted by row and nonzero.
  void set_column_unchecked(std::size_t col, Column entries) { columns_.at(col) = std::move(entries); }
  Vector column(std::size_t col) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  /// The same matrix read with relabelled spaces of equal dimensions.
  LinMap relabel(const Space& domain, const Space& codomain) const;
  /// Transposed matrix: the dual map between dual bases.
  LinMap transpose(const Space& domain, const Space& codomain) const;

  /// Composition: (f * g)(x) = f(g(x)).
  friend LinMap operator*(const LinMap& f, const LinMap& g);
  friend LinMap operator+(const LinMap& f, const LinMap& g);
  friend LinMap operator-(const LinMap& f, const LinMap& g);
  LinMap scaled(const Scalar& s) const;

 private:
  Space domain_;
  Space codomain_;
  std::vector<Column> columns_;
};

/// Kronecker product consistent with tensor_space ordering.
LinMap tensor_map(const LinMap& f, const LinMap& g);
LinMap tensor_maps(const std::vector<LinMap>& maps);

/// τ: a ⊗ b → b ⊗ a.
LinMap flip(const Space& a, const Space& b);

/// v_0 ⊗ ... ⊗ v_{n-1} ↦ v_{order[0]} ⊗ ... ⊗ v_{order[n-1]}.
LinMap permute_factors(const std::vector<Space>& factors, const std::vector<std::size_t>& order);

/// Exact entrywise equality. Throws ShapeMismatch when domains or codomains differ.
bool maps_equal(const LinMap& f, const LinMap& g);
/// First domain index where f and g differ.
std::optional<std::size_t> first_difference(const LinMap& f, const LinMap& g);

/// Reduced row-echelon basis of the column space (pivot = first nonzero
/// entry, scanning left to right); empty for the zero map.
std::vector<Vector> image_basis(const LinMap& f);

}  // namespace weakhopf
