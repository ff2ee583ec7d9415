#include "weakhopf/axioms.hpp"

#include "weakhopf/tensor_algebra.hpp"

namespace weakhopf {
namespace {

// Frequently used building blocks for one structure.
struct Ops {
  explicit Ops(const WeakBialgebra& wb)
      : h(wb.space()),
        k(Space::scalars(wb.field())),
        id(LinMap::identity(h)),
        m(wb.mult()),
        u(wb.unit_map()),
        delta(wb.comult()),
        eps(wb.counit()),
        eps_m(eps * m),
        tau(flip(h, h)),
        unit_coproduct(delta.apply(wb.unit())) {}

  LinMap t(const LinMap& a, const LinMap& b) const { return tensor_map(a, b); }
  LinMap t(const LinMap& a, const LinMap& b, const LinMap& c) const { return tensor_maps({a, b, c}); }

  Space h;
  Space k;
  LinMap id;
  LinMap m;
  LinMap u;
  LinMap delta;
  LinMap eps;
  LinMap eps_m;
  LinMap tau;
  Vector unit_coproduct;
};

LinMap target_map(const Ops& o) {
  return o.t(o.eps_m, o.id) * o.t(o.id, o.tau) * o.t(LinMap::constant(o.unit_coproduct), o.id);
}

LinMap source_map(const Ops& o) {
  return o.t(o.id, o.eps_m) * o.t(o.tau, o.id) * o.t(o.id, LinMap::constant(o.unit_coproduct));
}

// Columns of f all lie in the subspace.
Check columns_inside(std::string name, const LinMap& f, const Subspace& sub, const std::string& where) {
  const auto bad = sub.first_column_outside(f);
  if (!bad) return pass(std::move(name));
  Witness w;
  w.tuple = f.domain().label_tuple(*bad);
  w.lhs = terms_of(f.column(*bad));
  w.note = "value lies outside " + where;
  return fail(std::move(name), std::move(w));
}

Check same_subspace(std::string name, const Subspace& a, const Subspace& b, const std::string& what) {
  bool equal = a.dim() == b.dim();
  for (std::size_t i = 0; equal && i < a.dim(); ++i) equal = a.basis()[i] == b.basis()[i];
  if (equal) return pass(std::move(name));
  Witness w;
  w.note = what + ": dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim());
  for (const auto& v : a.basis()) {
    if (!b.contains(v)) {
      w.lhs = terms_of(v);
      break;
    }
  }
  return fail(std::move(name), std::move(w));
}

}  // namespace

Report check_coalgebra(const Coalgebra& c) {
  Report r;
  const LinMap id = LinMap::identity(c.space());
  const LinMap& d = c.comult();
  const LinMap& e = c.counit();
  r.run([&] { return compare_maps("comult_coassociative", tensor_map(d, id) * d, tensor_map(id, d) * d); });
  r.run([&] { return compare_maps("counit_left", tensor_map(e, id) * d, id); });
  r.run([&] { return compare_maps("counit_right", tensor_map(id, e) * d, id); });
  return r;
}

Report check_weak_bialgebra(const WeakBialgebra& wb) {
  Report r;
  const Ops o(wb);
  r.run([&] { return compare_maps("mult_associative", o.m * o.t(o.m, o.id), o.m * o.t(o.id, o.m)); });
  r.run([&] { return compare_maps("unit_left", o.m * o.t(o.u, o.id), o.id); });
  r.run([&] { return compare_maps("unit_right", o.m * o.t(o.id, o.u), o.id); });
  r.merge(check_coalgebra(wb.coalgebra()));
  r.run([&] {
    const LinMap mm = o.t(o.m, o.m) * o.t(o.id, o.tau, o.id) * o.t(o.delta, o.delta);
    return compare_maps("comult_multiplicative", o.delta * o.m, mm);
  });
  r.merge(check_counit_weakness(wb));
  r.merge(check_unit_weakness(wb));
  return r;
}

Report check_counit_weakness(const WeakBialgebra& wb) {
  Report r;
  const Ops o(wb);
  const LinMap triple = o.eps * o.m * o.t(o.m, o.id);
  const LinMap split = o.t(o.eps_m, o.eps_m);
  const LinMap middle = o.t(o.id, o.delta, o.id);
  r.run([&] { return compare_maps("counit_weak_multiplicative", triple, split * middle); });
  r.run([&] {
    return compare_maps("counit_weak_multiplicative_flipped", triple, split * o.t(o.id, o.tau, o.id) * middle);
  });
  return r;
}

Report check_unit_weakness(const WeakBialgebra& wb) {
  Report r;
  const Ops o(wb);
  const TensorAlgebra h3(o.m, 3);
  const Vector one = wb.unit();
  const Vector w = o.unit_coproduct;
  const Vector left = tensor_vector(one, w);
  const Vector right = tensor_vector(w, one);
  const Vector twice = o.t(o.delta, o.id).apply(w);
  r.run([&] { return compare_vectors("unit_coproduct_left_first", h3.multiply(left, right), twice); });
  r.run([&] { return compare_vectors("unit_coproduct_right_first", h3.multiply(right, left), twice); });
  return r;
}

CounitalPair counital_maps(const WeakBialgebra& wb) {
  const Ops o(wb);
  LinMap t = target_map(o);
  LinMap s = source_map(o);
  Subspace ht = Subspace::image(t);
  Subspace hs = Subspace::image(s);
  return CounitalPair{std::move(t), std::move(s), std::move(ht), std::move(hs)};
}

Report check_antipode(const WeakHopf& wh) {
  Report r;
  const Ops o(wh);
  const CounitalPair cp = counital_maps(wh);
  const LinMap& s = wh.antipode();
  r.run([&] { return compare_maps("antipode_target", o.m * o.t(o.id, s) * o.delta, cp.target); });
  r.run([&] { return compare_maps("antipode_source", o.m * o.t(s, o.id) * o.delta, cp.source); });
  r.run([&] {
    const LinMap lhs = o.m * o.t(o.m, o.id) * o.t(s, o.id, s) * o.t(o.delta, o.id) * o.delta;
    return compare_maps("antipode_sandwich", lhs, s);
  });
  return r;
}

Report check_bialgebra_identities(const WeakBialgebra& wb) {
  Report r;
  const Ops o(wb);
  const CounitalPair cp = counital_maps(wb);
  const LinMap& et = cp.target;
  const LinMap& es = cp.source;
  const TensorAlgebra h2(o.m, 2);
  const LinMap left_w = h2.left_multiplication(o.unit_coproduct);
  const LinMap right_w = h2.right_multiplication(o.unit_coproduct);

  r.run([&] { return compare_maps("coproduct_absorbs_unit_right", right_w * o.delta, o.delta); });
  r.run([&] { return compare_maps("coproduct_absorbs_unit_left", left_w * o.delta, o.delta); });
  r.run([&] { return compare_maps("reconstruction_via_target", o.m * o.t(et, o.id) * o.delta, o.id); });
  r.run([&] { return compare_maps("reconstruction_via_source", o.m * o.t(o.id, es) * o.delta, o.id); });
  r.run([&] { return compare_maps("target_map_idempotent", et * et, et); });
  r.run([&] { return compare_maps("source_map_idempotent", es * es, es); });
  r.run([&] { return compare_maps("counit_target_absorption", o.eps_m * o.t(o.id, et), o.eps_m); });
  r.run([&] { return compare_maps("counit_source_absorption", o.eps_m * o.t(es, o.id), o.eps_m); });
  r.run([&] {
    const Subspace st = tensor_subspace(cp.source_algebra, cp.target_algebra);
    if (st.contains(o.unit_coproduct)) return pass("unit_coproduct_in_source_target");
    Witness w;
    w.lhs = terms_of(o.unit_coproduct);
    w.note = "not in the tensor product of the source and target subalgebras";
    return fail("unit_coproduct_in_source_target", std::move(w));
  });
  r.run([&] { return compare_maps("target_map_right_absorption", et * o.m * o.t(o.id, et), et * o.m); });
  r.run([&] { return compare_maps("source_map_left_absorption", es * o.m * o.t(es, o.id), es * o.m); });
  r.run([&] {
    return compare_maps("coproduct_on_target_subalgebra", o.delta * et, left_w * o.t(o.id, o.u) * et);
  });
  r.run([&] {
    return compare_maps("coproduct_on_source_subalgebra", o.delta * es, right_w * o.t(o.u, o.id) * es);
  });
  r.run([&] { return compare_maps("target_leg_of_coproduct", o.t(o.id, et) * o.delta, left_w * o.t(o.id, o.u)); });
  r.run([&] { return compare_maps("source_leg_of_coproduct", o.t(es, o.id) * o.delta, right_w * o.t(o.u, o.id)); });
  r.run([&] {
    return compare_maps("target_map_product_formula", o.m * o.t(o.id, et),
                        o.t(o.eps_m, o.id) * o.t(o.id, o.tau) * o.t(o.delta, o.id));
  });
  r.run([&] {
    return compare_maps("source_map_product_formula", o.m * o.t(es, o.id),
                        o.t(o.id, o.eps_m) * o.t(o.tau, o.id) * o.t(o.id, o.delta));
  });
  const LinMap ts = o.t(et, es);
  r.run([&] { return compare_maps("target_source_commute", o.m * ts, o.m * o.tau * ts); });
  r.run([&] {
    Check c = columns_inside("target_subalgebra", o.m * o.t(et, et), cp.target_algebra, "the target subalgebra");
    if (c.passed && !cp.target_algebra.contains(wb.unit())) c = verdict(c.name, false, "unit outside");
    return c;
  });
  r.run([&] {
    Check c = columns_inside("source_subalgebra", o.m * o.t(es, es), cp.source_algebra, "the source subalgebra");
    if (c.passed && !cp.source_algebra.contains(wb.unit())) c = verdict(c.name, false, "unit outside");
    return c;
  });
  r.run([&] { return compare_maps("target_map_multiplicative_left", et * o.m * o.t(et, o.id), o.m * o.t(et, et)); });
  r.run([&] { return compare_maps("source_map_multiplicative_right", es * o.m * o.t(o.id, es), o.m * o.t(es, es)); });
  return r;
}

Report check_antipode_identities(const WeakHopf& wh) {
  Report r;
  const Ops o(wh);
  const CounitalPair cp = counital_maps(wh);
  const LinMap& et = cp.target;
  const LinMap& es = cp.source;
  const LinMap& s = wh.antipode();
  const LinMap w = LinMap::constant(o.unit_coproduct);

  r.run([&] { return compare_maps("target_map_via_antipode", et, o.t(o.eps_m, o.id) * o.t(s, w)); });
  r.run([&] { return compare_maps("source_map_via_antipode", es, o.t(o.id, o.eps_m) * o.t(w, s)); });
  r.run([&] { return compare_maps("target_after_antipode_eq_target_after_source", et * s, et * es); });
  r.run([&] { return compare_maps("target_after_source_eq_antipode_after_source", et * es, s * es); });
  r.run([&] { return compare_maps("source_after_antipode_eq_source_after_target", es * s, es * et); });
  r.run([&] { return compare_maps("source_after_target_eq_antipode_after_target", es * et, s * et); });
  r.run([&] {
    const LinMap lhs = o.t(o.id, o.m) * o.t(o.id, s, o.id) * o.t(o.id, o.delta) * o.delta;
    return compare_maps("antipode_left_leg_identity", lhs, o.t(o.m, s) * o.t(o.id, w));
  });
  r.run([&] {
    const LinMap lhs = o.t(o.m, o.id) * o.t(o.id, s, o.id) * o.t(o.delta, o.id) * o.delta;
    return compare_maps("antipode_right_leg_identity", lhs, o.t(s, o.m) * o.t(w, o.id));
  });
  r.run([&] { return compare_vectors("antipode_preserves_unit", s.apply(wh.unit()), wh.unit()); });
  r.run([&] { return compare_maps("counit_after_antipode", o.eps * s, o.eps); });
  r.run([&] {
    return same_subspace("antipode_maps_target_to_source", Subspace::image(s * et), cp.source_algebra,
                         "image of the target subalgebra vs source subalgebra");
  });
  r.run([&] {
    return same_subspace("antipode_maps_source_to_target", Subspace::image(s * es), cp.target_algebra,
                         "image of the source subalgebra vs target subalgebra");
  });
  r.run([&] { return compare_maps("antipode_anti_multiplicative", s * o.m, o.m * o.tau * o.t(s, s)); });
  r.run([&] { return compare_maps("antipode_anti_comultiplicative", o.delta * s, o.tau * o.t(s, s) * o.delta); });
  return r;
}

Report check_identity_suite(const WeakHopf& wh) {
  Report r = check_bialgebra_identities(wh);
  r.merge(check_antipode_identities(wh));
  return r;
}

Report check_weak_hopf(const WeakHopf& wh) {
  Report r = check_weak_bialgebra(wh);
  r.merge(check_antipode(wh));
  r.merge(check_identity_suite(wh));
  return r;
}

HopfVerdict is_hopf(const WeakHopf& wh) {
  const Ops o(wh);
  const CounitalPair cp = counital_maps(wh);
  const LinMap& s = wh.antipode();
  const LinMap unit_counit = o.u * o.eps;
  Report r;
  auto info = [](Check c) {
    c.informational = true;
    return c;
  };
  r.run([&] {
    return info(compare_vectors("criterion_unit_coproduct", o.unit_coproduct, tensor_vector(wh.unit(), wh.unit())));
  });
  r.run([&] { return info(compare_maps("criterion_counit_multiplicative", o.eps_m, o.t(o.eps, o.eps))); });
  r.run([&] { return info(compare_maps("criterion_antipode_right", o.m * o.t(o.id, s) * o.delta, unit_counit)); });
  r.run([&] { return info(compare_maps("criterion_antipode_left", o.m * o.t(s, o.id) * o.delta, unit_counit)); });
  r.run([&] {
    const bool trivial = cp.target_algebra.dim() == 1 && cp.source_algebra.dim() == 1 &&
                         cp.target_algebra.contains(wh.unit()) && cp.source_algebra.contains(wh.unit());
    return info(verdict("criterion_trivial_base", trivial,
                        "target/source subalgebra dimensions " + std::to_string(cp.target_algebra.dim()) + "/" +
                            std::to_string(cp.source_algebra.dim())));
  });
  const bool first = r.checks().front().passed;
  bool consistent = true;
  for (const auto& c : r.checks()) consistent = consistent && c.passed == first;
  r.add(verdict("criteria_consistent", consistent, "the Hopf criteria disagree"));
  return HopfVerdict{first && consistent, consistent, std::move(r)};
}

Check commutativity(const WeakBialgebra& wb) {
  return compare_maps("commutative", wb.mult(), wb.mult() * flip(wb.space(), wb.space()));
}

Check cocommutativity(const WeakBialgebra& wb) {
  return compare_maps("cocommutative", wb.comult(), flip(wb.space(), wb.space()) * wb.comult());
}

}  // namespace weakhopf
