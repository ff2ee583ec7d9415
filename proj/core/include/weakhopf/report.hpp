#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "weakhopf/linmap.hpp"

namespace weakhopf {

/// One nonzero coordinate: basis label and canonical coefficient.
struct Term {
  std::string label;
  std::string coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Evidence attached to a failed check.
struct Witness {
  /// Basis tuple at which the two sides were evaluated.
  std::vector<std::string> tuple;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
  std::string note;
};

struct Check {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  double seconds = 0.0;
  /// Reported but not counted by Report::passed().
  bool informational = false;
};

/// Ordered list of named checks about one subject.
class Report {
 public:
  explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  void set_subject(std::string s) { subject_ = std::move(s); }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check check);
  /// Appends every check of other, prefixing names with "prefix.".
  void merge(const Report& other, const std::string& prefix = {});
  /// Adds the check produced by fn, recording wall time.
  template <class Fn>
  void run(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Check c = fn();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    add(std::move(c));
  }

  /// All non-informational checks passed.
  bool passed() const;
  const Check* find(const std::string& name) const;
  /// Throws std::out_of_range for an unknown name.
  bool passed(const std::string& name) const;
  /// Failed checks that count towards passed().
  std::vector<std::string> failed_names() const;

  std::string to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

std::vector<Term> terms_of(const Vector& v);

Check pass(std::string name);
Check fail(std::string name, Witness witness);
Check verdict(std::string name, bool ok, const std::string& note_if_failed);
/// Compares lhs and rhs column by column; a failure names the first differing basis tuple.
Check compare_maps(std::string name, const LinMap& lhs, const LinMap& rhs);
Check compare_vectors(std::string name, const Vector& lhs, const Vector& rhs);

}  // namespace weakhopf
