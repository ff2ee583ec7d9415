#include "weakhopf/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

Witness at(std::vector<std::string> tuple, std::string note) {
  Witness w;
  w.tuple = std::move(tuple);
  w.note = std::move(note);
  return w;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::string> elements, const std::string& identity,
                                    const std::vector<std::vector<std::string>>& table) {
  const std::size_t n = elements.size();
  if (n == 0) throw PreconditionError("a group needs at least one element");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second) throw PreconditionError("duplicate group element " + elements[i]);
  }
  const auto find = [&](const std::string& x) {
    auto it = index.find(x);
    if (it == index.end()) throw PreconditionError("unknown group element " + x);
    return it->second;
  };
  const std::size_t e = find(identity);
  if (table.size() != n) throw PreconditionError("Cayley table has the wrong number of rows");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw PreconditionError("Cayley table row of the wrong length");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = find(table[i][j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t[e][i] != i || t[i][e] != i) throw PreconditionError("identity fails on " + elements[i]);
    bool has_inverse = false;
    for (std::size_t j = 0; j < n && !has_inverse; ++j) has_inverse = t[i][j] == e && t[j][i] == e;
    if (!has_inverse) throw PreconditionError("no inverse for " + elements[i]);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t[t[i][j]][k] != t[i][t[j][k]]) {
          throw PreconditionError("not associative at (" + elements[i] + ", " + elements[j] + ", " + elements[k] + ")");
        }
      }
    }
  }
  return FiniteGroup(std::move(elements), e, std::move(t));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? "a" : "a" + std::to_string(i));
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(labels), 0, std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Element s^a r^b stored at index 3a + b; s r = r² s.
  const std::vector<std::string> labels{"e", "r", "r2", "s", "sr", "sr2"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      const std::size_t a1 = x / 3, b1 = x % 3, a2 = y / 3, b2 = y % 3;
      // s^a1 r^b1 s^a2 r^b2 = s^(a1+a2) r^(±b1 + b2)
      const std::size_t b = ((a2 ? 3 - b1 : b1) + b2) % 3;
      t[x][y] = 3 * ((a1 + a2) % 2) + b;
    }
  }
  return FiniteGroup(labels, 0, std::move(t));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name == "s3") return symmetric3();
  if (name.size() > 1 && name[0] == 'z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() < 8) {
    const std::size_t n = std::stoul(name.substr(1));
    if (n > 0) return cyclic(n);
  }
  throw PreconditionError("unknown group name '" + name + "' (expected zN or s3)");
}

std::size_t FiniteGroup::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < order(); ++j) {
    if (table_[i][j] == identity_) return j;
  }
  throw PreconditionError("element without inverse");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (table_[i][j] != table_[j][i]) return false;
    }
  }
  return true;
}

Groupoid Groupoid::from_table(const std::vector<std::string>& arrows, const std::vector<std::string>& identities,
                              const std::vector<Composition>& compose) {
  const std::size_t n = arrows.size();
  if (n == 0) throw PreconditionError("a groupoid needs at least one arrow");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(arrows[i], i).second) throw PreconditionError("duplicate arrow " + arrows[i]);
  }
  const auto find = [&](const std::string& x) {
    auto it = index.find(x);
    if (it == index.end()) throw PreconditionError("unknown arrow " + x);
    return it->second;
  };
  std::vector<std::vector<std::optional<std::size_t>>> raw(n, std::vector<std::optional<std::size_t>>(n));
  for (const auto& [g, h, gh] : compose) {
    auto& slot = raw[find(g)][find(h)];
    if (slot) throw PreconditionError("composition " + g + "·" + h + " given twice");
    slot = find(gh);
  }

  // Units and inverses in the input order.
  std::vector<std::size_t> d(n), r(n), inv(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<std::size_t> right, left;
    for (std::size_t e = 0; e < n; ++e) {
      if (raw[g][e] == g) right.push_back(e);
      if (raw[e][g] == g) left.push_back(e);
    }
    if (right.size() != 1 || left.size() != 1) {
      throw PreconditionError("arrow " + arrows[g] + " lacks a unique source or target unit");
    }
    d[g] = right[0];
    r[g] = left[0];
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<std::size_t> found;
    for (std::size_t x = 0; x < n; ++x) {
      if (raw[x][g] == d[g] && raw[g][x] == r[g]) found.push_back(x);
    }
    if (found.size() != 1) throw PreconditionError("arrow " + arrows[g] + " lacks a unique inverse");
    inv[g] = found[0];
  }

  std::set<std::size_t> units(d.begin(), d.end());
  units.insert(r.begin(), r.end());
  std::set<std::string> declared(identities.begin(), identities.end());
  std::set<std::string> computed;
  for (auto e : units) computed.insert(arrows[e]);
  if (declared != computed) throw PreconditionError("declared identities differ from the units of the composition");

  // Canonical order: units first, then the rest, each by label.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ua = units.count(a) != 0;
    const bool ub = units.count(b) != 0;
    if (ua != ub) return ua;
    return arrows[a] < arrows[b];
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  Groupoid out;
  out.arrows_.resize(n);
  out.compose_.assign(n, std::vector<std::optional<std::size_t>>(n));
  out.source_.resize(n);
  out.target_.resize(n);
  out.inverse_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t i = pos[g];
    out.arrows_[i] = arrows[g];
    out.source_[i] = pos[d[g]];
    out.target_[i] = pos[r[g]];
    out.inverse_[i] = pos[inv[g]];
    for (std::size_t h = 0; h < n; ++h) {
      if (raw[g][h]) out.compose_[i][pos[h]] = pos[*raw[g][h]];
    }
  }
  const Report report = check_groupoid(out);
  if (!report.passed()) throw PreconditionError("not a groupoid: " + report.failed_names().front() + " fails");
  return out;
}

Groupoid Groupoid::disjoint_union(const std::vector<FiniteGroup>& groups) {
  if (groups.empty()) throw PreconditionError("disjoint union of no groups");
  std::vector<std::string> arrows, identities;
  std::vector<Composition> compose;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const auto& grp = groups[k];
    const std::string tag = std::to_string(k + 1) + ":";
    for (const auto& x : grp.elements()) arrows.push_back(tag + x);
    identities.push_back(tag + grp.label(grp.identity()));
    for (std::size_t i = 0; i < grp.order(); ++i) {
      for (std::size_t j = 0; j < grp.order(); ++j) {
        compose.emplace_back(tag + grp.label(i), tag + grp.label(j), tag + grp.label(grp.mul(i, j)));
      }
    }
  }
  return from_table(arrows, identities, compose);
}

Groupoid Groupoid::from_group(const FiniteGroup& group) {
  std::vector<Composition> compose;
  for (std::size_t i = 0; i < group.order(); ++i) {
    for (std::size_t j = 0; j < group.order(); ++j) {
      compose.emplace_back(group.label(i), group.label(j), group.label(group.mul(i, j)));
    }
  }
  return from_table(group.elements(), {group.label(group.identity())}, compose);
}

std::optional<std::size_t> Groupoid::index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Groupoid::compose(std::size_t g, std::size_t h) const { return compose_.at(g).at(h); }

std::vector<std::size_t> Groupoid::identities() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < size(); ++g) {
    if (is_identity(g)) out.push_back(g);
  }
  return out;
}

std::vector<Groupoid::Composition> Groupoid::table() const {
  std::vector<Composition> out;
  for (std::size_t g = 0; g < size(); ++g) {
    for (std::size_t h = 0; h < size(); ++h) {
      if (auto gh = compose(g, h)) out.emplace_back(label(g), label(h), label(*gh));
    }
  }
  return out;
}

Report check_groupoid(const Groupoid& gd) {
  Report rep("groupoid");
  const std::size_t n = gd.size();
  const auto& L = gd.arrows_;
  const auto c = [&](std::size_t g, std::size_t h) { return gd.compose_[g][h]; };

  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t l = 0; l < n; ++l) {
          const auto gh = c(g, h), hl = c(h, l);
          const std::optional<std::size_t> left = gh ? c(*gh, l) : std::nullopt;
          const std::optional<std::size_t> right = hl ? c(g, *hl) : std::nullopt;
          if (left != right) return fail("associative", at({L[g], L[h], L[l]}, "(gh)l and g(hl) disagree"));
        }
    return pass("associative");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t l = 0; l < n; ++l) {
          const auto gh = c(g, h);
          const bool triple = gh && c(*gh, l);
          if (triple != (gh && c(h, l))) {
            return fail("composable_chain", at({L[g], L[h], L[l]}, "(gh)l defined differs from gh and hl defined"));
          }
        }
    return pass("composable_chain");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g) {
      if (c(g, gd.source(g)) != g || c(gd.target(g), g) != g) return fail("units", at({L[g]}, "unit law fails"));
      for (std::size_t e = 0; e < n; ++e) {
        if ((c(g, e) == g && e != gd.source(g)) || (c(e, g) == g && e != gd.target(g))) {
          return fail("units", at({L[g], L[e]}, "unit is not unique"));
        }
      }
    }
    return pass("units");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t x = gd.inverse(g);
      if (c(x, g) != gd.source(g) || c(g, x) != gd.target(g)) return fail("inverses", at({L[g]}, "inverse law fails"));
    }
    return pass("inverses");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g) {
      if (gd.inverse(gd.inverse(g)) != g) return fail("inverse_involutive", at({L[g]}, "(g⁻¹)⁻¹ ≠ g"));
    }
    return pass("inverse_involutive");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        if (c(g, h).has_value() != (gd.source(g) == gd.target(h))) {
          return fail("composable_iff_ends_match", at({L[g], L[h]}, "composability differs from d(g)=r(h)"));
        }
      }
    return pass("composable_iff_ends_match");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        const auto gh = c(g, h);
        if (gh && (gd.source(*gh) != gd.source(h) || gd.target(*gh) != gd.target(g))) {
          return fail("ends_of_product", at({L[g], L[h]}, "d(gh)≠d(h) or r(gh)≠r(g)"));
        }
      }
    return pass("ends_of_product");
  });
  rep.run([&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        const auto gh = c(g, h);
        const auto rev = c(gd.inverse(h), gd.inverse(g));
        if (gh.has_value() != rev.has_value() || (gh && gd.inverse(*gh) != *rev)) {
          return fail("inverse_of_product", at({L[g], L[h]}, "(gh)⁻¹ ≠ h⁻¹g⁻¹"));
        }
      }
    return pass("inverse_of_product");
  });
  return rep;
}

}  // namespace weakhopf
