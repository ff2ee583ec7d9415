#include "weakhopf/smash.hpp"

#include "weakhopf/axioms.hpp"
#include "weakhopf/coaction.hpp"
#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

Space smash_labels(const Subspace& x) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    labels.push_back(terms_of(x.basis()[k]).size() == 1 ? x.ambient().label(x.pivots()[k]) : "x" + std::to_string(k));
  }
  return Space::basis(x.ambient().field(), std::move(labels));
}

Check inside(std::string name, const LinMap& f, const Subspace& sub) {
  const auto bad = sub.first_column_outside(f);
  if (!bad) return pass(std::move(name));
  Witness w;
  w.tuple = f.domain().label_tuple(*bad);
  w.lhs = terms_of(f.column(*bad));
  w.note = "image leaves the smash subspace";
  return fail(std::move(name), std::move(w));
}

// h ↦ ε(1₁h)1₂ and h ↦ 1₁ε(h1₂) for arbitrary (m, 1, Δ, ε) on a space.
LinMap target_of(const Space& a, const LinMap& m, const LinMap& delta, const LinMap& eps, const Vector& one) {
  const LinMap id = LinMap::identity(a);
  const Vector w = delta.apply(one);
  return tensor_map(eps * m, id) * tensor_map(id, flip(a, a)) * tensor_map(LinMap::constant(w), id);
}

LinMap source_of(const Space& a, const LinMap& m, const LinMap& delta, const LinMap& eps, const Vector& one) {
  const LinMap id = LinMap::identity(a);
  const Vector w = delta.apply(one);
  return tensor_map(id, eps * m) * tensor_map(flip(a, a), id) * tensor_map(id, LinMap::constant(w));
}

}  // namespace

Report check_comodule_bialgebra(const ComoduleBialgebra& cb) {
  const WeakHopf& h = cb.hopf;
  const WeakBialgebra& c = cb.algebra;
  const CoactionMap cm(h, c.coalgebra(), cb.rho);
  Report r = check_global_coaction(cm);
  const LinMap& rho = cm.rho();
  r.run([&] {
    const LinMap rhs = tensor_map(h.mult(), c.mult()) *
                       tensor_maps({LinMap::identity(h.space()), flip(c.space(), h.space()), LinMap::identity(c.space())}) *
                       tensor_map(rho, rho);
    return compare_maps("rho_multiplicative", rho * c.mult(), rhs);
  });
  r.run([&] {
    const Vector image = rho.apply(c.unit());
    const Subspace full = Subspace::span(c.space(), [&] {
      std::vector<Vector> b;
      for (std::size_t i = 0; i < c.dim(); ++i) b.push_back(Vector::basis(c.space(), i));
      return b;
    }());
    const Subspace target = tensor_subspace(counital_maps(h).source_algebra, full);
    if (target.contains(image)) return pass("rho_unit_in_source");
    Witness w;
    w.lhs = terms_of(image);
    w.note = "ρ(1) is not in H_s⊗C";
    return fail("rho_unit_in_source", std::move(w));
  });
  return r;
}

AmbientMaps ambient_maps(const ComoduleBialgebra& cb) {
  const WeakHopf& h = cb.hopf;
  const WeakBialgebra& c = cb.algebra;
  const Space& hs = h.space();
  const Space& cs = c.space();
  const LinMap id_h = LinMap::identity(hs);
  const LinMap id_c = LinMap::identity(cs);
  const LinMap rho = cb.rho.relabel(cs, tensor_space(hs, cs));
  const LinMap eps_m = h.counit() * h.mult();
  const Space a = tensor_space(cs, hs);

  LinMap p = tensor_maps({id_c, eps_m, id_h}) * permute_factors({hs, cs, hs, hs}, {1, 0, 2, 3}) *
             tensor_map(rho, h.comult());
  LinMap comult = tensor_maps({id_c, h.mult(), id_c, id_h}) * permute_factors({cs, hs, cs, hs, hs}, {0, 1, 3, 2, 4}) *
                  tensor_maps({id_c, rho, id_h, id_h}) * tensor_map(c.comult(), h.comult());
  LinMap counit = tensor_map(eps_m, c.counit()) * permute_factors({hs, cs, hs}, {0, 2, 1}) * tensor_map(rho, id_h);
  LinMap mult = tensor_map(c.mult(), h.mult()) * permute_factors({cs, hs, cs, hs}, {0, 2, 1, 3});
  Vector unit = p.apply(tensor_vector(c.unit(), h.unit()));
  std::optional<LinMap> antipode;
  if (cb.algebra_antipode) {
    antipode = p * tensor_map(*cb.algebra_antipode, h.antipode() * h.mult()) * permute_factors({hs, cs, hs}, {1, 0, 2}) *
               tensor_map(rho, id_h);
  }
  return AmbientMaps{a, std::move(p), std::move(comult), std::move(counit), std::move(mult), std::move(unit),
                     std::move(antipode)};
}

SmashCoproduct build_smash(const ComoduleBialgebra& cb, bool with_antipode) {
  Report r;
  r.merge(check_comodule_bialgebra(cb), "comodule");
  if (!r.passed()) throw PreconditionError("not a comodule bialgebra: " + r.failed_names().front() + " fails");
  Check commutative = commutativity(cb.hopf);
  commutative.name = "hopf_commutative";
  if (with_antipode && !commutative.passed) throw PreconditionError("antipode refused: H is not commutative");
  if (with_antipode && !cb.algebra_antipode) throw PreconditionError("antipode refused: C has no antipode");
  commutative.informational = !with_antipode;
  const bool is_commutative = commutative.passed;
  r.add(std::move(commutative));

  if (is_commutative) {
    const WeakHopf& h = cb.hopf;
    const CounitalPair cp = counital_maps(h);
    const LinMap& m = h.mult();
    r.run([&] { return compare_maps("target_after_source_is_target", cp.target * cp.source, cp.target); });
    r.run([&] { return compare_maps("source_after_target_is_source", cp.source * cp.target, cp.source); });
    r.run([&] { return compare_maps("target_map_multiplicative", cp.target * m, m * tensor_map(cp.target, cp.target)); });
    r.run([&] { return compare_maps("source_map_multiplicative", cp.source * m, m * tensor_map(cp.source, cp.source)); });
  }

  AmbientMaps amb = ambient_maps(cb);
  const Space& a = amb.ambient;
  const LinMap id_a = LinMap::identity(a);
  r.run([&] {
    Check c = compare_maps("projector_idempotent", amb.projector * amb.projector, amb.projector);
    c.informational = true;
    return c;
  });
  r.run([&] {
    return compare_maps("ambient_coassociative", tensor_map(amb.comult, id_a) * amb.comult,
                        tensor_map(id_a, amb.comult) * amb.comult);
  });

  Subspace x = Subspace::image(amb.projector);
  const Space xs = smash_labels(x);
  LinMap inc = x.inclusion(xs);
  LinMap ret = x.retraction(xs);
  const Subspace xx = tensor_subspace(x, x);
  r.run([&] { return inside("comult_preserves_subspace", amb.comult * inc, xx); });
  r.run([&] { return inside("mult_preserves_subspace", amb.mult * tensor_map(inc, inc), x); });
  if (with_antipode) r.run([&] { return inside("antipode_preserves_subspace", *amb.antipode * inc, x); });
  if (!r.passed()) throw AxiomFailure(std::move(r));

  r.run([&] {
    const LinMap pp = tensor_map(amb.projector, amb.projector);
    return compare_maps("product_of_projected_elements", amb.mult * pp, amb.projector * amb.mult);
  });
  r.run([&] {
    return compare_maps("comult_of_projected_elements", amb.comult * amb.projector,
                        tensor_map(amb.projector, amb.projector) * amb.comult);
  });

  WeakBialgebra b = WeakBialgebra::unchecked(xs, ret * amb.mult * tensor_map(inc, inc), ret.apply(amb.unit),
                                             tensor_map(ret, ret) * amb.comult * inc, amb.counit * inc);
  const LinMap id_x = LinMap::identity(xs);
  const LinMap u = b.unit_map();
  r.run([&] { return compare_maps("unit_left_identity", b.mult() * tensor_map(u, id_x), id_x); });
  r.run([&] { return compare_maps("unit_right_identity", b.mult() * tensor_map(id_x, u), id_x); });
  r.merge(verify_counit_weakness(b), "counit_lemma");
  r.merge(verify_unit_weakness(b), "unit_lemma");
  r.merge(check_weak_bialgebra(b), "weak_bialgebra");

  std::optional<WeakHopf> hopf;
  SmashCoproduct out{std::move(amb), std::move(x), std::move(inc), std::move(ret), b, std::nullopt, Report()};
  if (with_antipode) {
    hopf = WeakHopf::unchecked(b, out.retraction * *out.ambient.antipode * out.inclusion);
    r.merge(verify_smash_antipode(out), "smash_antipode");
    r.merge(check_antipode(*hopf), "antipode");
    r.merge(check_identity_suite(*hopf), "identities");
    r.run([&] {
      const HopfVerdict v = is_hopf(*hopf);
      Check c = *v.report.find("criteria_consistent");
      c.name = "hopf_criteria_consistent";
      return c;
    });
  }
  out.hopf = std::move(hopf);
  out.report = std::move(r);
  return out;
}

Report verify_counit_weakness(const WeakBialgebra& smash) { return check_counit_weakness(smash); }

Report verify_unit_weakness(const WeakBialgebra& smash) { return check_unit_weakness(smash); }

Report verify_smash_antipode(const SmashCoproduct& s) {
  Report r;
  const AmbientMaps& amb = s.ambient;
  if (!amb.antipode) {
    r.add(verdict("antipode_present", false, "no antipode was built"));
    return r;
  }
  const Space& a = amb.ambient;
  const LinMap id = LinMap::identity(a);
  const LinMap& m = amb.mult;
  const LinMap& d = amb.comult;
  const LinMap& sa = *amb.antipode;
  const LinMap& inc = s.inclusion;
  const LinMap et = target_of(a, m, d, amb.counit, amb.unit);
  const LinMap es = source_of(a, m, d, amb.counit, amb.unit);
  r.run([&] { return compare_maps("antipode_target", m * tensor_map(id, sa) * d * inc, et * inc); });
  r.run([&] { return compare_maps("antipode_source", m * tensor_map(sa, id) * d * inc, es * inc); });
  r.run([&] {
    const LinMap lhs = m * tensor_map(m, id) * tensor_maps({sa, id, sa}) * tensor_map(d, id) * d * inc;
    return compare_maps("antipode_sandwich", lhs, sa * inc);
  });
  return r;
}

}  // namespace weakhopf
