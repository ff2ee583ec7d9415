#include "weakhopf/linmap.hpp"

#include <algorithm>
#include <string>

#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

void require_same_field(const Space& a, const Space& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("spaces over " + a.field().name() + " and " + b.field().name());
  }
}

std::string shape(const LinMap& f) {
  return std::to_string(f.rows()) + "x" + std::to_string(f.cols());
}

void require_same_shape(const LinMap& f, const LinMap& g, const char* what) {
  require_same_field(f.domain(), g.domain());
  if (f.rows() != g.rows() || f.cols() != g.cols()) {
    throw ShapeMismatch(std::string(what) + ": " + shape(f) + " vs " + shape(g));
  }
}

// Merges two sorted columns into a·x + b·y.
LinMap::Column combine(const LinMap::Column& x, const LinMap::Column& y, bool subtract) {
  LinMap::Column out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].row < x[i].row) {
      out.push_back({y[j].row, subtract ? -y[j].value : y[j].value});
      ++j;
    } else {
      Scalar v = subtract ? x[i].value - y[j].value : x[i].value + y[j].value;
      if (!v.is_zero()) out.push_back({x[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

LinMap::Column to_column(const Vector& v) {
  LinMap::Column col;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) col.push_back({i, v[i]});
  }
  return col;
}

}  // namespace

Vector::Vector(Space space, std::vector<Scalar> coords) : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_.dim()) {
    throw ShapeMismatch("vector with " + std::to_string(coords_.size()) + " coordinates in a space of dimension " +
                        std::to_string(space_.dim()));
  }
}

Vector Vector::zero(const Space& space) {
  return Vector(space, std::vector<Scalar>(space.dim(), Scalar::zero(space.field())));
}

Vector Vector::basis(const Space& space, std::size_t i) {
  auto v = std::vector<Scalar>(space.dim(), Scalar::zero(space.field()));
  v.at(i) = Scalar::one(space.field());
  return Vector(space, std::move(v));
}

Vector Vector::from_ints(const Space& space, const std::vector<long>& coords) {
  std::vector<Scalar> v;
  v.reserve(coords.size());
  for (long c : coords) v.push_back(Scalar::integer(space.field(), c));
  return Vector(space, std::move(v));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.size() != size()) throw ShapeMismatch("vector addition with different dimensions");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.size() != size()) throw ShapeMismatch("vector subtraction with different dimensions");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector Vector::scaled(const Scalar& s) const {
  Vector out = *this;
  for (auto& c : out.coords_) c *= s;
  return out;
}

bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

Vector tensor_vector(const Vector& v, const Vector& w) {
  const Space space = tensor_space(v.space(), w.space());
  std::vector<Scalar> coords;
  coords.reserve(space.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) coords.push_back(v[i] * w[j]);
  }
  return Vector(space, std::move(coords));
}

LinMap::LinMap(Space domain, Space codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(domain_.dim()) {
  require_same_field(domain_, codomain_);
}

LinMap LinMap::identity(const Space& space) {
  LinMap out(space, space);
  for (std::size_t j = 0; j < space.dim(); ++j) out.columns_[j].push_back({j, Scalar::one(space.field())});
  return out;
}

LinMap LinMap::constant(const Vector& v) {
  LinMap out(Space::scalars(v.space().field()), v.space());
  out.columns_[0] = to_column(v);
  return out;
}

LinMap LinMap::functional(const Vector& values) {
  LinMap out(values.space(), Space::scalars(values.space().field()));
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!values[j].is_zero()) out.columns_[j].push_back({0, values[j]});
  }
  return out;
}

LinMap LinMap::from_columns(const Space& domain, const Space& codomain, const std::vector<Vector>& columns) {
  if (columns.size() != domain.dim()) throw ShapeMismatch("column count differs from domain dimension");
  LinMap out(domain, codomain);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != codomain.dim()) throw ShapeMismatch("column length differs from codomain dimension");
    out.columns_[j] = to_column(columns[j]);
  }
  return out;
}

LinMap LinMap::from_function(const Space& domain, const Space& codomain,
                             const std::function<Vector(std::size_t)>& image_of_basis) {
  LinMap out(domain, codomain);
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    const Vector v = image_of_basis(j);
    if (v.size() != codomain.dim()) throw ShapeMismatch("image vector length differs from codomain dimension");
    out.columns_[j] = to_column(v);
  }
  return out;
}

LinMap LinMap::from_int_rows(const Space& domain, const Space& codomain, const std::vector<std::vector<long>>& rows) {
  if (rows.size() != codomain.dim()) throw ShapeMismatch("row count differs from codomain dimension");
  LinMap out(domain, codomain);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != domain.dim()) throw ShapeMismatch("row length differs from domain dimension");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != 0) out.columns_[j].push_back({i, Scalar::integer(domain.field(), rows[i][j])});
    }
  }
  return out;
}

Scalar LinMap::at(std::size_t row, std::size_t col) const {
  for (const auto& e : columns_.at(col)) {
    if (e.row == row) return e.value;
  }
  return Scalar::zero(field());
}

void LinMap::set(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows()) throw ShapeMismatch("row index out of range");
  auto& column = columns_.at(col);
  auto it = std::lower_bound(column.begin(), column.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != column.end() && it->row == row) {
    if (value.is_zero()) {
      column.erase(it);
    } else {
      it->value = value;
    }
  } else if (!value.is_zero()) {
    column.insert(it, {row, value});
  }
}

Vector LinMap::column(std::size_t col) const {
  Vector out = Vector::zero(codomain_);
  std::vector<Scalar> coords = out.coords();
  for (const auto& e : columns_.at(col)) coords[e.row] = e.value;
  return Vector(codomain_, std::move(coords));
}

Vector LinMap::apply(const Vector& v) const {
  if (v.size() != cols()) {
    throw ShapeMismatch("applying a " + shape(*this) + " map to a vector of size " + std::to_string(v.size()));
  }
  std::vector<Scalar> coords(rows(), Scalar::zero(field()));
  for (std::size_t j = 0; j < cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& e : columns_[j]) coords[e.row] += e.value * v[j];
  }
  return Vector(codomain_, std::move(coords));
}

bool LinMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

LinMap LinMap::relabel(const Space& domain, const Space& codomain) const {
  if (domain.dim() != cols() || codomain.dim() != rows()) throw ShapeMismatch("relabel with different dimensions");
  LinMap out(domain, codomain);
  out.columns_ = columns_;
  return out;
}

LinMap LinMap::transpose(const Space& domain, const Space& codomain) const {
  if (domain.dim() != rows() || codomain.dim() != cols()) throw ShapeMismatch("transpose with mismatched dimensions");
  LinMap out(domain, codomain);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) out.columns_[e.row].push_back({j, e.value});
  }
  return out;
}

LinMap operator*(const LinMap& f, const LinMap& g) {
  require_same_field(f.domain(), g.domain());
  if (f.cols() != g.rows()) throw ShapeMismatch("composing " + shape(f) + " after " + shape(g));
  LinMap out(g.domain(), f.codomain());
  const Scalar zero = Scalar::zero(f.field());
  std::vector<Scalar> acc(f.rows(), zero);
  std::vector<char> touched(f.rows(), 0);
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    rows.clear();
    for (const auto& ge : g.columns_[j]) {
      for (const auto& fe : f.columns_[ge.row]) {
        if (!touched[fe.row]) {
          touched[fe.row] = 1;
          rows.push_back(fe.row);
        }
        acc[fe.row] += fe.value * ge.value;
      }
    }
    std::sort(rows.begin(), rows.end());
    auto& col = out.columns_[j];
    for (auto r : rows) {
      if (!acc[r].is_zero()) col.push_back({r, acc[r]});
      acc[r] = zero;
      touched[r] = 0;
    }
  }
  return out;
}

LinMap operator+(const LinMap& f, const LinMap& g) {
  require_same_shape(f, g, "adding maps");
  LinMap out(f.domain(), f.codomain());
  for (std::size_t j = 0; j < f.cols(); ++j) out.columns_[j] = combine(f.columns_[j], g.columns_[j], false);
  return out;
}

LinMap operator-(const LinMap& f, const LinMap& g) {
  require_same_shape(f, g, "subtracting maps");
  LinMap out(f.domain(), f.codomain());
  for (std::size_t j = 0; j < f.cols(); ++j) out.columns_[j] = combine(f.columns_[j], g.columns_[j], true);
  return out;
}

LinMap LinMap::scaled(const Scalar& s) const {
  LinMap out(domain_, codomain_);
  if (s.is_zero()) return out;
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) out.columns_[j].push_back({e.row, e.value * s});
  }
  return out;
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  require_same_field(f.domain(), g.domain());
  LinMap out(tensor_space(f.domain(), g.domain()), tensor_space(f.codomain(), g.codomain()));
  const std::size_t grows = g.rows();
  for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
    const auto& c1 = f.column_entries(j1);
    for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
      const auto& c2 = g.column_entries(j2);
      if (c1.empty() || c2.empty()) continue;
      LinMap::Column col;
      col.reserve(c1.size() * c2.size());
      for (const auto& e1 : c1) {
        for (const auto& e2 : c2) col.push_back({e1.row * grows + e2.row, e1.value * e2.value});
      }
      out.set_column_unchecked(j1 * g.cols() + j2, std::move(col));
    }
  }
  return out;
}

LinMap tensor_maps(const std::vector<LinMap>& maps) {
  if (maps.empty()) throw ShapeMismatch("tensor product of no maps");
  LinMap out = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) out = tensor_map(out, maps[i]);
  return out;
}

LinMap flip(const Space& a, const Space& b) { return permute_factors({a, b}, {1, 0}); }

LinMap permute_factors(const std::vector<Space>& factors, const std::vector<std::size_t>& order) {
  if (factors.empty() || order.size() != factors.size()) throw ShapeMismatch("permutation size differs from factor count");
  std::vector<char> seen(order.size(), 0);
  for (auto k : order) {
    if (k >= order.size() || seen[k]) throw ShapeMismatch("not a permutation of tensor factors");
    seen[k] = 1;
  }
  Space domain = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) domain = tensor_space(domain, factors[k]);
  Space codomain = factors[order.front()];
  for (std::size_t k = 1; k < order.size(); ++k) codomain = tensor_space(codomain, factors[order[k]]);

  std::vector<std::size_t> dims;
  for (const auto& f : factors) dims.push_back(f.dim());
  LinMap out(domain, codomain);
  const Scalar one = Scalar::one(domain.field());
  std::vector<std::size_t> idx(factors.size());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    std::size_t rest = j;
    for (std::size_t k = factors.size(); k-- > 0;) {
      idx[k] = rest % dims[k];
      rest /= dims[k];
    }
    std::size_t row = 0;
    for (auto k : order) row = row * dims[k] + idx[k];
    out.set_column_unchecked(j, {{row, one}});
  }
  return out;
}

bool maps_equal(const LinMap& f, const LinMap& g) { return !first_difference(f, g).has_value(); }

std::optional<std::size_t> first_difference(const LinMap& f, const LinMap& g) {
  require_same_shape(f, g, "comparing maps");
  for (std::size_t j = 0; j < f.cols(); ++j) {
    const auto& a = f.column_entries(j);
    const auto& b = g.column_entries(j);
    if (a.size() != b.size()) return j;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].row != b[i].row || !(a[i].value == b[i].value)) return j;
    }
  }
  return std::nullopt;
}

}  // namespace weakhopf
