#include "weakhopf/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json terms_json(const std::vector<Term>& terms) {
  auto out = ordered_json::array();
  for (const auto& t : terms) out.push_back(ordered_json::array({t.label, t.coeff}));
  return out;
}

std::string terms_text(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    if (terms[i].coeff != "1") out += terms[i].coeff + "*";
    out += terms[i].label;
  }
  return out;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

void Report::add(Check check) { checks_.push_back(std::move(check)); }

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.informational && !c.passed) return false;
  }
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  if (!c) throw std::out_of_range("no check named " + name);
  return c->passed;
}

std::vector<std::string> Report::failed_names() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (!c.passed && !c.informational) out.push_back(c.name);
  }
  return out;
}

std::string Report::to_json(bool timing) const {
  ordered_json j;
  j["subject"] = subject_;
  j["passed"] = passed();
  auto arr = ordered_json::array();
  for (const auto& c : checks_) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (c.informational) cj["informational"] = true;
    if (c.witness) {
      ordered_json w;
      w["tuple"] = c.witness->tuple;
      w["lhs"] = terms_json(c.witness->lhs);
      w["rhs"] = terms_json(c.witness->rhs);
      if (!c.witness->note.empty()) w["note"] = c.witness->note;
      cj["witness"] = std::move(w);
    }
    if (timing) cj["seconds"] = c.seconds;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string Report::to_text(bool timing) const {
  std::ostringstream out;
  out << "subject: " << subject_ << "\n";
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : (c.informational ? "INFO " : "FAIL ")) << c.name;
    if (timing) out << "  (" << seconds_text(c.seconds) << " s)";
    out << "\n";
    if (c.witness) {
      const auto& w = c.witness.value();
      if (!w.tuple.empty()) {
        out << "    at (";
        for (std::size_t i = 0; i < w.tuple.size(); ++i) out << (i ? ", " : "") << w.tuple[i];
        out << ")\n";
      }
      if (!w.lhs.empty() || !w.rhs.empty()) {
        out << "    lhs = " << terms_text(w.lhs) << "\n";
        out << "    rhs = " << terms_text(w.rhs) << "\n";
      }
      if (!w.note.empty()) out << "    " << w.note << "\n";
    }
  }
  out << (passed() ? "result: all checks passed" : "result: " + std::to_string(failed_names().size()) + " failed")
      << "\n";
  return out.str();
}

std::vector<Term> terms_of(const Vector& v) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({v.space().label(i), v[i].to_string()});
  }
  return out;
}

Check pass(std::string name) { return Check{std::move(name), true, std::nullopt}; }

Check fail(std::string name, Witness witness) { return Check{std::move(name), false, std::move(witness)}; }

Check verdict(std::string name, bool ok, const std::string& note_if_failed) {
  if (ok) return pass(std::move(name));
  Witness w;
  w.note = note_if_failed;
  return fail(std::move(name), std::move(w));
}

Check compare_maps(std::string name, const LinMap& lhs, const LinMap& rhs) {
  const auto diff = first_difference(lhs, rhs);
  if (!diff) return pass(std::move(name));
  Witness w;
  w.tuple = lhs.domain().label_tuple(*diff);
  w.lhs = terms_of(lhs.column(*diff));
  w.rhs = terms_of(rhs.column(*diff));
  return fail(std::move(name), std::move(w));
}

Check compare_vectors(std::string name, const Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) throw ShapeMismatch("comparing vectors of different dimensions");
  if (lhs == rhs) return pass(std::move(name));
  Witness w;
  w.lhs = terms_of(lhs);
  w.rhs = terms_of(rhs);
  return fail(std::move(name), std::move(w));
}

}  // namespace weakhopf
