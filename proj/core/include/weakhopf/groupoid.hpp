#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "weakhopf/report.hpp"

namespace weakhopf {

/// Finite group given by its Cayley table.
class FiniteGroup {
 public:
  /// table[i][j] is the label of elements[i]·elements[j]. Throws PreconditionError
  /// unless the table is a group.
  static FiniteGroup from_table(std::vector<std::string> elements, const std::string& identity,
                                const std::vector<std::vector<std::string>>& table);
  /// ℤ_n with labels e, a, a2, ..., a{n-1}.
  static FiniteGroup cyclic(std::size_t n);
  /// S₃ = ⟨r, s | r³ = s² = e, srs = r²⟩ with labels e, r, r2, s, sr, sr2.
  static FiniteGroup symmetric3();
  /// "z<n>" or "s3".
  static FiniteGroup named(const std::string& name);

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t i) const { return elements_.at(i); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t inverse(std::size_t i) const;
  bool is_abelian() const;

 private:
  FiniteGroup(std::vector<std::string> elements, std::size_t identity, std::vector<std::vector<std::size_t>> table)
      : elements_(std::move(elements)), identity_(identity), table_(std::move(table)) {}

  std::vector<std::string> elements_;
  std::size_t identity_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Finite groupoid with arrows ordered identities first, then the other
/// arrows, each block sorted by label.
class Groupoid {
 public:
  using Composition = std::tuple<std::string, std::string, std::string>;

  /// Partial composition table as triples (g, h, gh); absent pairs are undefined.
  /// Throws PreconditionError when the table is not a groupoid or the declared
  /// identities differ from the computed ones.
  static Groupoid from_table(const std::vector<std::string>& arrows, const std::vector<std::string>& identities,
                             const std::vector<Composition>& compose);
  /// Disjoint union with arrows labelled "k:x" for x in the k-th group (1-based).
  static Groupoid disjoint_union(const std::vector<FiniteGroup>& groups);
  /// A group viewed as a one-object groupoid, keeping its labels.
  static Groupoid from_group(const FiniteGroup& group);

  std::size_t size() const { return arrows_.size(); }
  const std::vector<std::string>& arrows() const { return arrows_; }
  const std::string& label(std::size_t i) const { return arrows_.at(i); }
  std::optional<std::size_t> index(const std::string& label) const;
  std::optional<std::size_t> compose(std::size_t g, std::size_t h) const;
  std::size_t source(std::size_t g) const { return source_.at(g); }
  std::size_t target(std::size_t g) const { return target_.at(g); }
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
  bool is_identity(std::size_t g) const { return source_.at(g) == g; }
  std::vector<std::size_t> identities() const;
  /// All defined compositions as label triples, in index order.
  std::vector<Composition> table() const;

 private:
  Groupoid() = default;

  std::vector<std::string> arrows_;
  std::vector<std::vector<std::optional<std::size_t>>> compose_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<std::size_t> inverse_;

  friend Report check_groupoid(const Groupoid& g);
};

/// The groupoid axioms and their standard consequences, checked exhaustively.
Report check_groupoid(const Groupoid& g);

}  // namespace weakhopf
