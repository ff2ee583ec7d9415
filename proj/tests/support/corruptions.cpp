#include "corruptions.hpp"

#include "examples.hpp"
#include "weakhopf/axioms.hpp"

namespace weakhopf::examples {

namespace {

Scalar two() { return Scalar::integer(q(), 2); }

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return "{" + s + "}";
}

}  // namespace

std::vector<Corruption> corruptions() {
  std::vector<Corruption> out;
  const WeakHopf h = kg_z2z2();
  {
    LinMap m = h.mult();
    m.set(0, 2 * 4 + 3, two());
    out.push_back({"m", "δ_{1:a}δ_{2:a} = 2δ_{1:e} in kG",
                   check_weak_bialgebra(WeakBialgebra::unchecked(h.space(), m, h.unit(), h.comult(), h.counit())),
                   "mult_associative",
                   {"1:a", "1:e", "2:a"},
                   {"mult_associative", "comult_multiplicative", "counit_weak_multiplicative",
                    "counit_weak_multiplicative_flipped"}});
  }
  {
    const WeakHopf g = group_weak_z2();
    LinMap d = g.comult();
    d.set(3, 0, Scalar::one(q()));
    out.push_back({"Δ", "a⊗a coefficient of Δ(e) set to 1 in the ε(1)=2 structure",
                   check_weak_bialgebra(WeakBialgebra::unchecked(g.space(), g.mult(), g.unit(), d, g.counit())),
                   "comult_multiplicative",
                   {"e", "e"},
                   {"comult_multiplicative", "counit_weak_multiplicative", "counit_weak_multiplicative_flipped",
                    "unit_coproduct_left_first", "unit_coproduct_right_first"}});
  }
  {
    LinMap e = h.counit();
    e.set(0, 2, two());
    out.push_back({"ε", "ε(δ_{1:a}) = 2 in kG", check_coalgebra(Coalgebra(h.space(), h.comult(), e)), "counit_left",
                   {"1:a"}, {"counit_left", "counit_right"}});
  }
  {
    LinMap s = h.antipode();
    s.set(2, 2, two());
    out.push_back({"S", "S(δ_{1:a}) = 2δ_{1:a} in kG", check_antipode(WeakHopf::unchecked(h, s)), "antipode_target",
                   {"1:a"}, {"antipode_target", "antipode_source", "antipode_sandwich"}});
  }
  {
    const CoactionMap good = rho_h_on_kz2({"1", "0", "0", "0"});
    LinMap rho = good.rho();
    rho.set(1, 1, two());
    const CoactionMap cm(good.hopf(), good.coalgebra(), rho);
    out.push_back({"ρ", "ρ(a) = 2δ_{1:e}⊗a", check_partial_coaction(cm, true), "counit_compatibility", {"a"},
                   {"counit_compatibility", "comult_compatibility"}});
  }
  {
    LinMap pi = projection_onto(0);
    pi.set(0, 0, two());
    out.push_back({"π", "π(e) = 2e", check_projection(kz2_hopf().coalgebra(), pi), "projection_idempotent", {"e"},
                   {"projection_idempotent"}});
  }
  return out;
}

std::string corruption_mismatch(const Corruption& c) {
  if (c.report.failed_names() != c.expected_failed) {
    return "failed " + joined(c.report.failed_names()) + ", expected " + joined(c.expected_failed);
  }
  const Check* p = c.report.find(c.primary);
  if (!p || p->passed) return c.primary + " did not fail";
  if (!p->witness || p->witness->tuple.empty()) return c.primary + " has no witness tuple";
  if (!c.tuple.empty() && p->witness->tuple != c.tuple) return c.primary + " names the wrong tuple";
  return {};
}

}  // namespace weakhopf::examples
