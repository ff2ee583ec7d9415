#include "weakhopf/tensor_algebra.hpp"

#include <map>

#include "weakhopf/errors.hpp"

namespace weakhopf {

TensorAlgebra::TensorAlgebra(const LinMap& mult, std::size_t power)
    : mult_(mult), power_(power), base_dim_(mult.codomain().dim()), space_(tensor_power(mult.codomain(), power)) {
  if (mult.cols() != base_dim_ * base_dim_) throw ShapeMismatch("multiplication must map A⊗A to A");
}

Vector TensorAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != space_.dim() || b.size() != space_.dim()) throw ShapeMismatch("factor outside the tensor algebra");
  const Field field = space_.field();
  std::vector<Scalar> out(space_.dim(), Scalar::zero(field));
  std::vector<std::size_t> ia(power_);
  std::vector<std::size_t> ib(power_);
  // Partial products over the first k factors: flat index → coefficient.
  std::map<std::size_t, Scalar> acc;
  std::map<std::size_t, Scalar> next;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      std::size_t ri = i;
      std::size_t rj = j;
      for (std::size_t k = power_; k-- > 0;) {
        ia[k] = ri % base_dim_;
        ri /= base_dim_;
        ib[k] = rj % base_dim_;
        rj /= base_dim_;
      }
      acc.clear();
      acc.emplace(0, a[i] * b[j]);
      for (std::size_t k = 0; k < power_ && !acc.empty(); ++k) {
        next.clear();
        for (const auto& e : mult_.column_entries(ia[k] * base_dim_ + ib[k])) {
          for (const auto& [idx, c] : acc) {
            auto [it, fresh] = next.try_emplace(idx * base_dim_ + e.row, c * e.value);
            if (!fresh) it->second += c * e.value;
          }
        }
        acc.swap(next);
      }
      for (const auto& [idx, c] : acc) out[idx] += c;
    }
  }
  return Vector(space_, std::move(out));
}

LinMap TensorAlgebra::left_multiplication(const Vector& w) const {
  return LinMap::from_function(space_, space_, [&](std::size_t j) { return multiply(w, Vector::basis(space_, j)); });
}

LinMap TensorAlgebra::right_multiplication(const Vector& w) const {
  return LinMap::from_function(space_, space_, [&](std::size_t j) { return multiply(Vector::basis(space_, j), w); });
}

}  // namespace weakhopf
