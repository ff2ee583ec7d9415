#include "weakhopf/subspace.hpp"

#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

struct Echelon {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan on row vectors; the pivot of a row is its first nonzero entry.
Echelon reduce(std::vector<std::vector<Scalar>> rows, std::size_t width) {
  Echelon out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    const Scalar inv = rows[next][col].inverse();
    for (auto& x : rows[next]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) {
        if (!rows[next][c].is_zero()) rows[r][c] -= factor * rows[next][c];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

Subspace Subspace::span(const Space& ambient, const std::vector<Vector>& vectors) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient.dim()) throw ShapeMismatch("spanning vector outside the ambient space");
    if (!v.is_zero()) rows.push_back(v.coords());
  }
  Echelon e = reduce(std::move(rows), ambient.dim());
  std::vector<Vector> basis;
  for (auto& r : e.rows) basis.emplace_back(ambient, std::move(r));
  return Subspace(ambient, std::move(basis), std::move(e.pivots));
}

Subspace Subspace::image(const LinMap& f) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (!f.column_entries(j).empty()) cols.push_back(f.column(j));
  }
  return span(f.codomain(), cols);
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_.dim()) throw ShapeMismatch("vector outside the ambient space");
  std::vector<Scalar> coords;
  coords.reserve(dim());
  Vector rest = v;
  for (std::size_t k = 0; k < dim(); ++k) {
    const Scalar c = v[pivots_[k]];
    coords.push_back(c);
    if (!c.is_zero()) rest -= basis_[k].scaled(c);
  }
  if (!rest.is_zero()) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

std::optional<std::size_t> Subspace::first_column_outside(const LinMap& f) const {
  if (f.rows() != ambient_.dim()) throw ShapeMismatch("map codomain differs from the ambient space");
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (!f.column_entries(j).empty() && !contains(f.column(j))) return j;
  }
  return std::nullopt;
}

Space Subspace::coordinate_space(const std::string& prefix) const {
  return Space::indexed(ambient_.field(), dim(), prefix);
}

LinMap Subspace::inclusion(const Space& coords) const {
  if (coords.dim() != dim()) throw ShapeMismatch("coordinate space has the wrong dimension");
  return LinMap::from_columns(coords, ambient_, basis_);
}

LinMap Subspace::retraction(const Space& coords) const {
  if (coords.dim() != dim()) throw ShapeMismatch("coordinate space has the wrong dimension");
  LinMap out(ambient_, coords);
  const Scalar one = Scalar::one(ambient_.field());
  for (std::size_t k = 0; k < dim(); ++k) out.set(k, pivots_[k], one);
  return out;
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) vs.push_back(tensor_vector(x, y));
  }
  return Subspace::span(tensor_space(a.ambient(), b.ambient()), vs);
}

std::size_t rank(const LinMap& f) { return Subspace::image(f).dim(); }

std::vector<Vector> image_basis(const LinMap& f) { return Subspace::image(f).basis(); }

}  // namespace weakhopf
