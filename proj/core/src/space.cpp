#include "weakhopf/space.hpp"

#include <set>

#include "weakhopf/errors.hpp"

namespace weakhopf {

Space::Space(Field field, std::vector<std::shared_ptr<const std::vector<std::string>>> factors)
    : field_(field), factors_(std::move(factors)) {
  dim_ = 1;
  for (const auto& f : factors_) dim_ *= f->size();
}

Space Space::basis(const Field& field, std::vector<std::string> labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw PreconditionError("duplicate basis label '" + l + "'");
  }
  return Space(field, {std::make_shared<const std::vector<std::string>>(std::move(labels))});
}

Space Space::indexed(const Field& field, std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return basis(field, std::move(labels));
}

Space Space::scalars(const Field& field) { return Space(field, {}); }

Space Space::factor(std::size_t k) const { return Space(field_, {factors_.at(k)}); }

std::vector<std::size_t> Space::multi_index(std::size_t i) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const auto n = factors_[k]->size();
    out[k] = i % n;
    i /= n;
  }
  return out;
}

std::size_t Space::flat_index(const std::vector<std::size_t>& multi) const {
  std::size_t i = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) i = i * factors_[k]->size() + multi[k];
  return i;
}

std::string Space::label(std::size_t i) const {
  if (factors_.empty()) return "1";
  std::string out;
  const auto idx = multi_index(i);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) out += "⊗";
    out += (*factors_[k])[idx[k]];
  }
  return out;
}

std::vector<std::string> Space::label_tuple(std::size_t i) const {
  std::vector<std::string> out;
  const auto idx = multi_index(i);
  for (std::size_t k = 0; k < idx.size(); ++k) out.push_back((*factors_[k])[idx[k]]);
  return out;
}

bool operator==(const Space& a, const Space& b) {
  if (a.field_ != b.field_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t k = 0; k < a.factors_.size(); ++k) {
    if (a.factors_[k] != b.factors_[k] && *a.factors_[k] != *b.factors_[k]) return false;
  }
  return true;
}

Space tensor_space(const Space& a, const Space& b) {
  if (a.field_ != b.field_) {
    throw FieldMismatch("tensor product of spaces over " + a.field_.name() + " and " + b.field_.name());
  }
  auto factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return Space(a.field_, std::move(factors));
}

Space tensor_power(const Space& space, std::size_t n) {
  Space out = Space::scalars(space.field());
  for (std::size_t i = 0; i < n; ++i) out = tensor_space(out, space);
  return out;
}

}  // namespace weakhopf
