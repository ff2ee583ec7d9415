#include "weakhopf/dualization.hpp"

#include "weakhopf/dual.hpp"
#include "weakhopf/errors.hpp"

namespace weakhopf {

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::partial: return "partial";
    case ActionKind::symmetric_partial: return "symmetric-partial";
    case ActionKind::unchecked: break;
  }
  return "unchecked";
}

ModuleActionMap::ModuleActionMap(WeakHopf acting, Coalgebra c, LinMap act)
    : k_(std::move(acting)), c_(std::move(c)), act_(std::move(act)) {
  const Space ck = tensor_space(c_.space(), k_.space());
  if (act_.cols() != ck.dim() || act_.rows() != c_.dim() || act_.field() != k_.field()) {
    throw ShapeMismatch("action must map C⊗K to C");
  }
  act_ = act_.relabel(ck, c_.space());
}

Report check_partial_action(const ModuleActionMap& ma, bool symmetric) {
  const Space& c = ma.coalgebra().space();
  const Space& k = ma.acting().space();
  const LinMap id_c = LinMap::identity(c);
  const LinMap id_k = LinMap::identity(k);
  const LinMap& act = ma.act();
  const LinMap& dc = ma.coalgebra().comult();
  const LinMap& ec = ma.coalgebra().counit();
  const LinMap& dk = ma.acting().comult();
  const LinMap& mk = ma.acting().mult();
  Report r;
  r.run([&] { return compare_maps("unit_acts_trivially", act * tensor_map(id_c, ma.acting().unit_map()), id_c); });
  r.run([&] {
    const LinMap rhs = tensor_map(act, act) * tensor_maps({id_c, flip(c, k), id_k}) * tensor_map(dc, dk);
    return compare_maps("comult_compatibility", dc * act, rhs);
  });
  const LinMap lhs = act * tensor_map(act, id_k);
  const LinMap split = tensor_maps({dc, dk, id_k});
  r.run([&] {
    const LinMap rhs = tensor_map(ec * act, act * tensor_map(id_c, mk)) *
                       permute_factors({c, c, k, k, k}, {0, 2, 1, 3, 4}) * split;
    return compare_maps("partial_associativity", lhs, rhs);
  });
  if (symmetric) {
    r.run([&] {
      const LinMap rhs = tensor_map(act * tensor_map(id_c, mk), ec * act) *
                         permute_factors({c, c, k, k, k}, {0, 2, 4, 1, 3}) * split;
      return compare_maps("symmetric_associativity", lhs, rhs);
    });
  }
  return r;
}

ActionKind classify(ModuleActionMap& ma) {
  if (check_partial_action(ma, true).passed()) {
    ma.kind_ = ActionKind::symmetric_partial;
  } else if (check_partial_action(ma, false).passed()) {
    ma.kind_ = ActionKind::partial;
  } else {
    ma.kind_ = ActionKind::unchecked;
  }
  return ma.kind_;
}

ModuleActionMap coaction_to_action(const CoactionMap& cm) {
  if (cm.kind() == CoactionKind::unchecked) throw PreconditionError("coaction is not classified as partial");
  const WeakHopf k = dual_weak_hopf(cm.hopf());
  const std::size_t n = cm.hopf().dim();
  const std::size_t dc = cm.coalgebra().dim();
  LinMap act(tensor_space(cm.coalgebra().space(), k.space()), cm.coalgebra().space());
  for (std::size_t c = 0; c < dc; ++c) {
    for (const auto& e : cm.rho().column_entries(c)) {
      const std::size_t j = e.row / dc;
      const std::size_t target = e.row % dc;
      act.set(target, c * n + j, e.value);
    }
  }
  ModuleActionMap out(k, cm.coalgebra(), std::move(act));
  classify(out);
  return out;
}

CoactionMap action_to_coaction(const ModuleActionMap& ma, const WeakHopf& h, const std::vector<Vector>& basis,
                               const std::vector<Vector>& dual_basis) {
  const std::size_t n = h.dim();
  if (ma.acting().dim() != n) throw PreconditionError("acting algebra is not the dual of H");
  if (basis.size() != n || dual_basis.size() != n) throw PreconditionError("bases must have dim H elements");
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i].size() != n || dual_basis[i].size() != n) throw PreconditionError("basis vector of the wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      Scalar pairing = Scalar::zero(h.field());
      for (std::size_t t = 0; t < n; ++t) pairing += dual_basis[i][t] * basis[j][t];
      if (!(pairing == (i == j ? Scalar::one(h.field()) : Scalar::zero(h.field())))) {
        throw PreconditionError("the bases are not dual");
      }
    }
  }
  const Space& cs = ma.coalgebra().space();
  const Space& ks = ma.acting().space();
  const LinMap rho = LinMap::from_function(cs, tensor_space(h.space(), cs), [&](std::size_t c) {
    Vector sum = Vector::zero(tensor_space(h.space(), cs));
    for (std::size_t i = 0; i < n; ++i) {
      const Vector acted = ma.act().apply(tensor_vector(Vector::basis(cs, c), Vector(ks, dual_basis[i].coords())));
      sum += tensor_vector(Vector(h.space(), basis[i].coords()), acted);
    }
    return sum;
  });
  CoactionMap out(h, ma.coalgebra(), rho);
  classify(out);
  return out;
}

CoactionMap action_to_coaction(const ModuleActionMap& ma, const WeakHopf& h) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < h.dim(); ++i) basis.push_back(Vector::basis(h.space(), i));
  return action_to_coaction(ma, h, basis, basis);
}

ModuleActionMap lambda_action(const WeakHopf& h, const Coalgebra& c, const Vector& lambda) {
  if (lambda.size() != h.dim()) throw ShapeMismatch("functional of the wrong dimension");
  const LinMap act = tensor_map(LinMap::identity(c.space()), LinMap::functional(Vector(h.space(), lambda.coords())));
  return ModuleActionMap(h, c, act);
}

LambdaVerdict check_lambda(const WeakHopf& h, const Vector& lambda) {
  if (lambda.size() != h.dim()) throw ShapeMismatch("functional of the wrong dimension");
  const LinMap l = LinMap::functional(Vector(h.space(), lambda.coords()));
  const Space k = Space::scalars(h.field());
  const LinMap id = LinMap::identity(h.space());
  Report r;
  r.run([&] {
    return compare_vectors("unital", Vector(k, {l.apply(h.unit())[0]}), Vector(k, {Scalar::one(h.field())}));
  });
  r.run([&] {
    const LinMap ll = tensor_map(l, l);
    return compare_maps("multiplicative_twisted", ll, ll * tensor_map(id, h.mult()) * tensor_map(h.comult(), id));
  });
  const bool holds = r.passed();
  return LambdaVerdict{holds, std::move(r)};
}

Report lambda_equivalence(const WeakHopf& h, const Vector& lambda) {
  const WeakHopf dual = dual_weak_hopf(h);
  const LambdaVerdict lv = check_lambda(h, lambda);
  const Vector as_element(dual.space(), lambda.coords());
  const bool partial = rho_h_criteria(dual, as_element, RhoMode::partial).holds;
  const bool symmetric = rho_h_criteria(dual, as_element, RhoMode::symmetric).holds;
  Report r;
  auto info = [](std::string name, bool value) {
    Check c = verdict(std::move(name), value, "false");
    c.informational = true;
    return c;
  };
  r.add(info("lambda_conditions", lv.holds));
  r.add(info("rho_lambda_partial", partial));
  r.add(info("rho_lambda_symmetric", symmetric));
  r.add(verdict("lambda_equivalence", lv.holds == partial, "λ conditions disagree with the ρ_λ partial criteria"));
  return r;
}

}  // namespace weakhopf
