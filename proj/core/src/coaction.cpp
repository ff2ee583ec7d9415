#include "weakhopf/coaction.hpp"

#include "weakhopf/axioms.hpp"
#include "weakhopf/dual.hpp"
#include "weakhopf/errors.hpp"
#include "weakhopf/tensor_algebra.hpp"

namespace weakhopf {
namespace {

struct CoOps {
  explicit CoOps(const CoactionMap& cm)
      : h(cm.hopf().space()),
        c(cm.coalgebra().space()),
        id_h(LinMap::identity(h)),
        id_c(LinMap::identity(c)),
        m(cm.hopf().mult()),
        delta_h(cm.hopf().comult()),
        eps_h(cm.hopf().counit()),
        delta_c(cm.coalgebra().comult()),
        eps_c(cm.coalgebra().counit()),
        rho(cm.rho()) {}

  LinMap comult_rhs() const {
    return tensor_maps({m, id_c, id_c}) * tensor_maps({id_h, flip(c, h), id_c}) * tensor_map(rho, rho) * delta_c;
  }
  LinMap twice() const { return tensor_map(id_h, rho) * rho; }
  LinMap partial_rhs() const {
    return tensor_maps({m, id_h, id_c}) * tensor_map(tensor_map(id_h, eps_c), tensor_map(delta_h, id_c)) *
           tensor_map(rho, rho) * delta_c;
  }
  LinMap symmetric_rhs() const {
    const LinMap shuffle = permute_factors({h, h, c, h}, {0, 3, 1, 2});
    return tensor_maps({m, id_h, id_c}) * shuffle * tensor_map(tensor_map(delta_h, id_c), tensor_map(id_h, eps_c)) *
           tensor_map(rho, rho) * delta_c;
  }

  Space h;
  Space c;
  LinMap id_h;
  LinMap id_c;
  LinMap m;
  LinMap delta_h;
  LinMap eps_h;
  LinMap delta_c;
  LinMap eps_c;
  LinMap rho;
};

Check counit_compatibility(const CoOps& o) {
  return compare_maps("counit_compatibility", tensor_map(o.eps_h, o.id_c) * o.rho, o.id_c);
}

Check comult_compatibility(const CoOps& o) {
  return compare_maps("comult_compatibility", tensor_map(o.id_h, o.delta_c) * o.rho, o.comult_rhs());
}

Check target_compatibility(const CoactionMap& cm, const CoOps& o, std::string name) {
  const LinMap et = counital_maps(cm.hopf()).target;
  return compare_maps(std::move(name), tensor_map(o.id_h, o.eps_c) * o.rho, tensor_map(et, o.eps_c) * o.rho);
}

Space sub_space(const Subspace& d) {
  std::vector<std::string> labels;
  const Space& amb = d.ambient();
  for (std::size_t k = 0; k < d.dim(); ++k) {
    const auto terms = terms_of(d.basis()[k]);
    labels.push_back(terms.size() == 1 ? amb.label(d.pivots()[k]) : "d" + std::to_string(k));
  }
  return Space::basis(amb.field(), std::move(labels));
}

bool same_vector(const Vector& a, const Vector& b) { return a.size() == b.size() && a == b; }

}  // namespace

std::string to_string(CoactionKind kind) {
  switch (kind) {
    case CoactionKind::global: return "global";
    case CoactionKind::partial: return "partial";
    case CoactionKind::symmetric_partial: return "symmetric-partial";
    case CoactionKind::unchecked: break;
  }
  return "unchecked";
}

CoactionMap::CoactionMap(WeakHopf h, Coalgebra c, LinMap rho) : h_(std::move(h)), c_(std::move(c)), rho_(std::move(rho)) {
  const Space hc = tensor_space(h_.space(), c_.space());
  if (rho_.cols() != c_.dim() || rho_.rows() != hc.dim() || rho_.field() != h_.field()) {
    throw ShapeMismatch("coaction must map C to H⊗C");
  }
  rho_ = rho_.relabel(c_.space(), hc);
}

Report check_global_coaction(const CoactionMap& cm) {
  const CoOps o(cm);
  Report r;
  r.run([&] { return counit_compatibility(o); });
  r.run([&] { return comult_compatibility(o); });
  r.run([&] { return compare_maps("coassociativity", o.twice(), tensor_map(o.delta_h, o.id_c) * o.rho); });
  r.run([&] { return target_compatibility(cm, o, "target_compatibility"); });
  return r;
}

Report check_partial_coaction(const CoactionMap& cm, bool symmetric) {
  const CoOps o(cm);
  Report r;
  r.run([&] { return counit_compatibility(o); });
  r.run([&] { return comult_compatibility(o); });
  const LinMap lhs = o.twice();
  r.run([&] { return compare_maps("partial_coassociativity", lhs, o.partial_rhs()); });
  if (symmetric) r.run([&] { return compare_maps("symmetric_coassociativity", lhs, o.symmetric_rhs()); });
  return r;
}

CoactionKind classify(CoactionMap& cm) {
  if (check_global_coaction(cm).passed()) {
    cm.kind_ = CoactionKind::global;
  } else if (check_partial_coaction(cm, true).passed()) {
    cm.kind_ = CoactionKind::symmetric_partial;
  } else if (check_partial_coaction(cm, false).passed()) {
    cm.kind_ = CoactionKind::partial;
  } else {
    cm.kind_ = CoactionKind::unchecked;
  }
  return cm.kind_;
}

Check globality_criterion(const CoactionMap& cm) { return target_compatibility(cm, CoOps(cm), "globality_criterion"); }

Check target_axiom_redundancy(const CoactionMap& cm) {
  const Report r = check_global_coaction(cm);
  if (!r.passed("counit_compatibility") || !r.passed("comult_compatibility") || !r.passed("coassociativity") ||
      r.passed("target_compatibility")) {
    return pass("target_axiom_redundancy");
  }
  Check c = *r.find("target_compatibility");
  c.name = "target_axiom_redundancy";
  c.witness->note = "first three axioms hold but the target-map axiom fails";
  return c;
}

Check globality_equivalence(const CoactionMap& cm) {
  const bool partial = check_partial_coaction(cm, false).passed();
  const bool criterion = globality_criterion(cm).passed;
  const bool global = check_global_coaction(cm).passed();
  return verdict("globality_equivalence", partial ? criterion == global : !global,
                 "partial check and criterion disagree with the global check");
}

std::string to_string(RhoMode mode) {
  switch (mode) {
    case RhoMode::global: return "global";
    case RhoMode::partial: return "partial";
    case RhoMode::symmetric: return "symmetric";
  }
  return "global";
}

RhoMode parse_rho_mode(const std::string& text) {
  if (text == "global") return RhoMode::global;
  if (text == "partial") return RhoMode::partial;
  if (text == "symmetric") return RhoMode::symmetric;
  throw PreconditionError("unknown mode '" + text + "' (expected global, partial or symmetric)");
}

CoactionMap rho_h_coaction(const WeakHopf& h, const Coalgebra& c, const Vector& element) {
  if (element.size() != h.dim()) throw ShapeMismatch("element outside H");
  const LinMap rho = tensor_map(LinMap::constant(Vector(h.space(), element.coords())), LinMap::identity(c.space()));
  return CoactionMap(h, c, rho);
}

RhoHVerdict rho_h_criteria(const WeakHopf& h, const Vector& element, RhoMode mode) {
  const Vector x(h.space(), element.coords());
  const Vector one = h.unit();
  const TensorAlgebra h2(h.mult(), 2);
  const TensorAlgebra h1(h.mult(), 1);
  const Vector dx = h.comult().apply(x);
  const Vector xx = tensor_vector(x, x);
  const Field f = h.field();
  Report r;
  auto info = [](Check c) {
    c.informational = true;
    return c;
  };
  r.run([&] {
    return compare_vectors("counit_one", Vector(Space::scalars(f), {h.counit().apply(x)[0]}),
                           Vector(Space::scalars(f), {Scalar::one(f)}));
  });
  const Vector square(h.space(), h1.multiply(x, x).coords());
  if (mode == RhoMode::global) {
    r.run([&] { return compare_vectors("idempotent", square, x); });
    r.run([&] { return compare_vectors("grouplike", dx, xx); });
    r.run([&] {
      const Vector fixed(h.space(), counital_maps(h).target.apply(x).coords());
      return info(compare_vectors("fixed_by_target_map", fixed, x));
    });
  } else {
    const Vector x1 = tensor_vector(x, one);
    r.run([&] { return compare_vectors("left_grouplike", h2.multiply(x1, dx), xx); });
    if (mode == RhoMode::symmetric) r.run([&] { return compare_vectors("right_grouplike", h2.multiply(dx, x1), xx); });
    r.run([&] { return info(compare_vectors("idempotent", square, x)); });
  }
  const bool holds = r.passed();
  r.run([&] {
    const CoactionMap probe = rho_h_coaction(h, Coalgebra::ground(f), x);
    const bool probe_ok = mode == RhoMode::global ? check_global_coaction(probe).passed()
                                                  : check_partial_coaction(probe, mode == RhoMode::symmetric).passed();
    return verdict("probe_coalgebra_agrees", probe_ok == holds, "element conditions disagree with the coaction checker");
  });
  return RhoHVerdict{holds, std::move(r)};
}

CandidateSpec::Family parse_candidate_family(const std::string& text) {
  if (text == "basis") return CandidateSpec::Family::basis;
  if (text == "uniform-subsets") return CandidateSpec::Family::uniform_subsets;
  if (text == "subset-sums") return CandidateSpec::Family::subset_sums;
  throw PreconditionError("unknown candidate family '" + text + "' (expected basis, uniform-subsets or subset-sums)");
}

std::vector<Vector> generate_candidates(const WeakHopf& h, const CandidateSpec& spec) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  std::vector<Vector> out;
  switch (spec.family) {
    case CandidateSpec::Family::basis:
      for (std::size_t i = 0; i < n; ++i) out.push_back(Vector::basis(h.space(), i));
      break;
    case CandidateSpec::Family::uniform_subsets:
    case CandidateSpec::Family::subset_sums: {
      if (n > 12) throw PreconditionError("subset candidates limited to dimension 12");
      const bool uniform = spec.family == CandidateSpec::Family::uniform_subsets;
      for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        const long size = __builtin_popcountl(mask);
        if (uniform && !f.is_rational() && size % static_cast<long>(f.characteristic()) == 0) continue;
        const Scalar weight = uniform ? Scalar::fraction(f, 1, size) : Scalar::one(f);
        std::vector<Scalar> coords(n, Scalar::zero(f));
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1UL) coords[i] = weight;
        }
        out.emplace_back(h.space(), std::move(coords));
      }
      break;
    }
    case CandidateSpec::Family::list:
      for (const auto& v : spec.list) {
        if (v.size() != n) throw PreconditionError("candidate of the wrong dimension");
        out.emplace_back(h.space(), v.coords());
      }
      break;
  }
  return out;
}

std::vector<Vector> scan_rho_h(const WeakHopf& h, const CandidateSpec& spec, RhoMode mode) {
  std::vector<Vector> out;
  for (const auto& v : generate_candidates(h, spec)) {
    if (!rho_h_criteria(h, v, mode).holds) continue;
    bool seen = false;
    for (const auto& w : out) seen = seen || same_vector(v, w);
    if (!seen) out.push_back(v);
  }
  return out;
}

Report check_projection(const Coalgebra& c, const LinMap& pi) {
  if (pi.cols() != c.dim() || pi.rows() != c.dim()) throw ShapeMismatch("projection must map C to C");
  const LinMap p = pi.relabel(c.space(), c.space());
  Report r;
  r.run([&] { return compare_maps("projection_idempotent", p * p, p); });
  r.run([&] {
    const Subspace d = Subspace::image(p);
    const Subspace dd = tensor_subspace(d, d);
    const LinMap images = c.comult() * d.inclusion(d.coordinate_space());
    const auto bad = dd.first_column_outside(images);
    if (!bad) return pass("image_subcoalgebra");
    Witness w;
    w.tuple = {"image basis vector " + std::to_string(*bad)};
    w.lhs = terms_of(images.column(*bad));
    w.note = "comultiplication leaves the image";
    return fail("image_subcoalgebra", std::move(w));
  });
  return r;
}

CoalgebraProjection CoalgebraProjection::make(const Coalgebra& c, const LinMap& pi) {
  const Report r = check_projection(c, pi);
  if (!r.passed()) throw PreconditionError("invalid coalgebra projection: " + r.failed_names().front() + " fails");
  const LinMap p = pi.relabel(c.space(), c.space());
  Subspace d = Subspace::image(p);
  const Space ds = sub_space(d);
  const LinMap inc = d.inclusion(ds);
  const LinMap ret = d.retraction(ds);
  Coalgebra sub(ds, tensor_map(ret, ret) * c.comult() * inc, c.counit() * inc);
  return CoalgebraProjection(c, p, std::move(d), std::move(sub));
}

InducedCoaction induce_partial_coaction(const CoactionMap& cm, const CoalgebraProjection& proj) {
  if (!check_global_coaction(cm).passed()) throw PreconditionError("the coaction to induce from is not global");
  if (!(proj.coalgebra().space() == cm.coalgebra().space())) throw ShapeMismatch("projection on a different coalgebra");
  const Space& hs = cm.hopf().space();
  const LinMap id_h = LinMap::identity(hs);
  const LinMap inc = proj.inclusion();
  const LinMap ret = proj.retraction();
  const LinMap& pi = proj.pi();
  const LinMap rp = ret * pi;
  const Coalgebra& d = proj.sub();
  const LinMap rho_bar = tensor_map(id_h, rp) * cm.rho() * inc;
  CoactionMap out(cm.hopf(), d, rho_bar);

  Report r;
  r.run([&] {
    const LinMap lhs = tensor_map(id_h, d.comult()) * out.rho();
    const LinMap rhs = tensor_maps({id_h, rp, rp}) * tensor_map(id_h, cm.coalgebra().comult()) * cm.rho() * inc;
    return compare_maps("projection_comult_compatible", lhs, rhs);
  });
  const Report partial = check_partial_coaction(out, true);
  for (const auto* name : {"partial_coassociativity", "symmetric_coassociativity"}) {
    Check c = *partial.find(name);
    c.name = std::string("projection_") + name;
    r.add(std::move(c));
  }
  const bool conditions = r.passed();
  r.run([&] {
    return verdict("conditions_match_symmetric_partial", conditions == partial.passed(),
                   "projection conditions disagree with the symmetric partial check");
  });
  r.run([&] {
    Check c = globality_criterion(out);
    c.informational = true;
    return c;
  });
  r.run([&] { return globality_equivalence(out); });
  classify(out);
  return InducedCoaction{std::move(out), std::move(r)};
}

CoactionMap dual_basis_coaction(const WeakHopf& h) {
  const WeakHopf d = dual_weak_hopf(h);
  const std::size_t n = h.dim();
  LinMap rho(h.space(), tensor_space(d.space(), h.space()));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : h.mult().column_entries(c * n + i)) rho.set(i * n + e.row, c, e.value);
    }
  }
  return CoactionMap(d, h.coalgebra(), std::move(rho));
}

}  // namespace weakhopf
