#include "cli.hpp"

#include <filesystem>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weakhopf/axioms.hpp"
#include "weakhopf/coaction.hpp"
#include "weakhopf/constructions.hpp"
#include "weakhopf/dual.hpp"
#include "weakhopf/dualization.hpp"
#include "weakhopf/errors.hpp"
#include "weakhopf/io.hpp"
#include "weakhopf/smash.hpp"

namespace weakhopf::cli {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

struct Globals {
  std::string field;
  std::string format = "text";
  bool no_verify = false;
  bool timing = false;
};

std::string base(const std::string& path) { return fs::path(path).filename().string(); }

Check info(std::string name, bool value, const std::string& note = "false") {
  Check c = verdict(std::move(name), value, note);
  c.informational = true;
  return c;
}

std::string terms_text(const Vector& v) {
  std::string s;
  for (const auto& t : terms_of(v)) {
    if (!s.empty()) s += " + ";
    s += (t.coeff == "1" ? "" : t.coeff + " ") + t.label;
  }
  return s.empty() ? "0" : s;
}

class Command {
 public:
  Command(Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  void emit(const Report& r) const {
    out_ << (g_.format == "json" ? r.to_json(g_.timing) : r.to_text(g_.timing));
  }
  int finish(const Report& r) const {
    emit(r);
    return r.passed() ? 0 : 1;
  }

  StructureData load(const std::string& path) const {
    StructureData d = load_structure(path);
    if (!g_.field.empty() && !(parse_field(g_.field) == d.space.field())) {
      throw PreconditionError(base(path) + ": declared over " + d.space.field().name() + ", not " + g_.field);
    }
    return d;
  }
  Field build_field() const { return g_.field.empty() ? Field::rationals() : parse_field(g_.field); }

  /// H and C from the flags, else from entries embedded in the companion file.
  StructureData resolve(const std::string& flag, const std::string& companion, const std::string& key) const {
    if (!flag.empty()) return load(flag);
    if (auto d = embedded_structure(companion, key)) return *d;
    throw PreconditionError("no --" + key + " given and " + base(companion) + " embeds none");
  }

  /// Re-validates a built weak Hopf algebra, then writes it to path or stdout.
  int deliver(const WeakHopf& wh, const std::string& path, const std::string& subject) const {
    if (!g_.no_verify) {
      Report r = check_weak_hopf(wh);
      r.set_subject(subject);
      if (!r.passed()) {
        emit(r);
        return 1;
      }
      if (!path.empty()) emit(r);
    }
    if (path.empty()) {
      out_ << write_structure(wh);
    } else {
      write_text(path, write_structure(wh));
    }
    return 0;
  }

  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }
  const Globals& globals() const { return g_; }

 private:
  Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
};

CoactionMap load_coaction(const Command& cmd, const std::string& h_path, const std::string& c_path,
                          const std::string& rho_path) {
  const WeakHopf h = cmd.resolve(h_path, rho_path, "H").hopf();
  const Coalgebra c = cmd.resolve(c_path, rho_path, "C").coalgebra();
  CoactionMap cm(h, c, parse_rho(read_text(rho_path), h, c, base(rho_path)));
  classify(cm);
  return cm;
}

Report coaction_report(const CoactionMap& cm, RhoMode mode) {
  Report r;
  if (mode == RhoMode::global) {
    r.merge(check_global_coaction(cm));
  } else {
    r.merge(check_partial_coaction(cm, mode == RhoMode::symmetric));
  }
  Check crit = globality_criterion(cm);
  crit.informational = true;
  r.add(std::move(crit));
  r.add(target_axiom_redundancy(cm));
  r.add(globality_equivalence(cm));
  r.add(info("classified_" + to_string(cm.kind()), true));
  return r;
}

ojson smash_sidecar(const SmashCoproduct& s, const Report& r, bool timing) {
  ojson j;
  j["subject"] = r.subject();
  j["dimension"] = s.subspace.dim();
  ojson basis = ojson::array();
  for (std::size_t i = 0; i < s.subspace.dim(); ++i) {
    ojson terms = ojson::array();
    for (const auto& t : terms_of(s.subspace.basis()[i])) terms.push_back(ojson::array({t.label, t.coeff}));
    basis.push_back(ojson{{"label", s.bialgebra.space().label(i)}, {"ambient", terms}});
  }
  j["basis"] = basis;
  j["report"] = ojson::parse(r.to_json(timing));
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  Command cmd(g, out, err);
  CLI::App app{"Exact checker for finite-dimensional weak Hopf algebras and their partial coactions", "weakhopf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", g.field, "Ground field for builds, Q or F<p>; checked against loaded files");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-verify", g.no_verify, "Skip re-validation of built structures");
  app.add_flag("--timing", g.timing, "Include per-check wall time in reports");

  std::function<int()> action;

  // check
  std::string check_file, check_kind = "weak-hopf";
  auto* check = app.add_subcommand("check", "Run the axiom suite on a structure file");
  check->add_option("file", check_file, "Structure file")->required();
  check->add_option("--kind", check_kind, "Declared kind")
      ->check(CLI::IsMember({"weak-hopf", "weak-bialgebra", "coalgebra"}));
  check->callback([&] {
    action = [&] {
      const StructureData d = cmd.load(check_file);
      Report r(base(check_file));
      if (check_kind == "coalgebra") {
        r.merge(check_coalgebra(d.coalgebra()));
      } else if (check_kind == "weak-bialgebra") {
        const WeakBialgebra wb = d.bialgebra();
        r.merge(check_weak_bialgebra(wb));
        r.merge(check_bialgebra_identities(wb), "identities");
      } else {
        const WeakHopf wh = d.hopf();
        r.merge(check_weak_hopf(wh));
        r.merge(is_hopf(wh).report, "hopf_criteria");
      }
      return cmd.finish(r);
    };
  });

  // build
  auto* build = app.add_subcommand("build", "Build a structure and write it as a structure file");
  build->require_subcommand(1);
  std::string out_path, groups_arg, groupoid_file, h_path, c_path, rho_path, group_name, report_path;
  std::size_t order = 0;
  bool want_antipode = false;

  auto* b_alg = build->add_subcommand("groupoid-algebra", "Groupoid algebra kG");
  auto* b_groups = b_alg->add_option("--groups", groups_arg, "Disjoint union of named groups, e.g. z2,z2");
  b_alg->add_option("--groupoid", groupoid_file, "Groupoid file")->excludes(b_groups);
  b_alg->add_option("-o,--output", out_path, "Output structure file");
  b_alg->callback([&] {
    action = [&] {
      if (groups_arg.empty() == groupoid_file.empty()) throw PreconditionError("give exactly one of --groups, --groupoid");
      const Groupoid gd = groupoid_file.empty() ? Groupoid::disjoint_union(parse_group_list(groups_arg))
                                                : parse_groupoid(read_text(groupoid_file), base(groupoid_file));
      return cmd.deliver(groupoid_algebra(gd, cmd.build_field()), out_path,
                         groupoid_file.empty() ? "k[" + groups_arg + "]" : base(groupoid_file));
    };
  });

  auto* b_dual = build->add_subcommand("dual", "Dual weak Hopf algebra H*");
  b_dual->add_option("--H", h_path, "Structure file of H")->required();
  b_dual->add_option("-o,--output", out_path, "Output structure file");
  b_dual->callback([&] {
    action = [&] { return cmd.deliver(dual_weak_hopf(cmd.load(h_path).hopf()), out_path, base(h_path) + "*"); };
  });

  auto* b_group = build->add_subcommand("group-weak", "Weak Hopf structure on kG for a finite abelian group");
  auto* o_order = b_group->add_option("--order", order, "Cyclic group order");
  b_group->add_option("--group", group_name, "Named group (zN, s3)")->excludes(o_order);
  b_group->add_option("-o,--output", out_path, "Output structure file");
  b_group->callback([&] {
    action = [&] {
      if ((order == 0) == group_name.empty()) throw PreconditionError("give exactly one of --order, --group");
      const FiniteGroup grp = group_name.empty() ? FiniteGroup::cyclic(order) : FiniteGroup::named(group_name);
      const std::string subject = group_name.empty() ? "z" + std::to_string(order) : group_name;
      return cmd.deliver(abelian_group_weak_hopf(grp, cmd.build_field()), out_path, subject);
    };
  });

  auto* b_smash = build->add_subcommand("smash", "Weak smash coproduct C x H");
  b_smash->add_option("--H", h_path, "Structure file of H")->required();
  b_smash->add_option("--C", c_path, "Structure file of C")->required();
  b_smash->add_option("--rho", rho_path, "Coaction file")->required();
  b_smash->add_flag("--antipode", want_antipode, "Also build the antipode");
  b_smash->add_option("-o,--output", out_path, "Output structure file");
  b_smash->add_option("--report", report_path, "Sidecar report (default: <output stem>.report.json)");
  b_smash->callback([&] {
    action = [&] {
      const WeakHopf h = cmd.load(h_path).hopf();
      const StructureData cd = cmd.load(c_path);
      const WeakBialgebra c = cd.bialgebra();
      const LinMap rho = parse_rho(read_text(rho_path), h, c.coalgebra(), base(rho_path));
      const ComoduleBialgebra cb{h, c, cd.antipode, rho};
      const SmashCoproduct s = build_smash(cb, want_antipode);
      Report r = s.report;
      r.set_subject(base(c_path) + " x " + base(h_path));
      if (!cmd.globals().no_verify && s.hopf) r.merge(check_weak_hopf(*s.hopf), "output");
      std::string sidecar = report_path;
      if (sidecar.empty() && !out_path.empty()) {
        fs::path p(out_path);
        sidecar = (p.parent_path() / (p.stem().string() + ".report.json")).string();
      }
      if (!sidecar.empty()) write_text(sidecar, smash_sidecar(s, r, cmd.globals().timing).dump(2) + "\n");
      const std::string text = s.hopf ? write_structure(*s.hopf) : write_structure(s.bialgebra);
      if (!r.passed()) return cmd.finish(r);
      if (out_path.empty()) {
        cmd.out() << text;
        return 0;
      }
      write_text(out_path, text);
      return cmd.finish(r);
    };
  });

  // coaction
  auto* coaction = app.add_subcommand("coaction", "Coactions of a weak Hopf algebra on a coalgebra");
  coaction->require_subcommand(1);
  std::string mode_arg = "global", proj_path, sub_out, candidates_arg = "basis";

  auto* c_check = coaction->add_subcommand("check", "Check a coaction in the given mode");
  c_check->add_option("--H", h_path, "Structure file of H");
  c_check->add_option("--C", c_path, "Structure file of C");
  c_check->add_option("--rho", rho_path, "Coaction file")->required();
  c_check->add_option("--mode", mode_arg, "global, partial or symmetric");
  c_check->callback([&] {
    action = [&] {
      const RhoMode mode = parse_rho_mode(mode_arg);
      const CoactionMap cm = load_coaction(cmd, h_path, c_path, rho_path);
      Report r(base(rho_path));
      r.merge(coaction_report(cm, mode));
      return cmd.finish(r);
    };
  });

  auto* c_induce = coaction->add_subcommand("induce", "Induce a partial coaction on the image of a projection");
  c_induce->add_option("--H", h_path, "Structure file of H");
  c_induce->add_option("--C", c_path, "Structure file of C");
  c_induce->add_option("--rho", rho_path, "Global coaction file")->required();
  c_induce->add_option("--proj", proj_path, "Projection file")->required();
  c_induce->add_option("-o,--output", out_path, "Induced coaction file");
  c_induce->add_option("--sub-out", sub_out, "Coalgebra file for the image");
  c_induce->callback([&] {
    action = [&] {
      const CoactionMap cm = load_coaction(cmd, h_path, c_path, rho_path);
      const LinMap pi = parse_projection(read_text(proj_path), cm.coalgebra(), base(proj_path));
      const CoalgebraProjection proj = CoalgebraProjection::make(cm.coalgebra(), pi);
      const InducedCoaction ind = induce_partial_coaction(cm, proj);
      Report r(base(proj_path));
      r.merge(ind.report);
      r.add(info("classified_" + to_string(ind.coaction.kind()), true));
      if (!out_path.empty()) write_text(out_path, write_rho(ind.coaction));
      if (!sub_out.empty()) write_text(sub_out, write_coalgebra(proj.sub()));
      return cmd.finish(r);
    };
  });

  auto* c_scan = coaction->add_subcommand("scan-rho-h", "Search a candidate family for admissible h in rho_h");
  c_scan->add_option("--H", h_path, "Structure file of H")->required();
  c_scan->add_option("--mode", mode_arg, "global, partial or symmetric");
  c_scan->add_option("--candidates", candidates_arg, "basis, uniform-subsets or subset-sums");
  c_scan->callback([&] {
    action = [&] {
      const RhoMode mode = parse_rho_mode(mode_arg);
      const WeakHopf h = cmd.load(h_path).hopf();
      const CandidateSpec spec{parse_candidate_family(candidates_arg), {}};
      const auto found = scan_rho_h(h, spec, mode);
      Report r(base(h_path));
      r.add(info("candidates_" + std::to_string(generate_candidates(h, spec).size()), true));
      for (const auto& v : found) r.add(pass("admissible " + terms_text(v)));
      return cmd.finish(r);
    };
  });

  auto* c_dual = coaction->add_subcommand("dual-basis", "Write the dual-basis coaction of H* on H");
  c_dual->add_option("--H", h_path, "Structure file of H")->required();
  c_dual->add_option("-o,--output", out_path, "Coaction file")->required();
  c_dual->add_option("--dual-out", sub_out, "Structure file for H*");
  c_dual->callback([&] {
    action = [&] {
      CoactionMap cm = dual_basis_coaction(cmd.load(h_path).hopf());
      classify(cm);
      write_text(out_path, write_rho(cm));
      if (!sub_out.empty()) write_text(sub_out, write_structure(cm.hopf()));
      Report r(base(h_path));
      r.merge(coaction_report(cm, RhoMode::global));
      return cmd.finish(r);
    };
  });

  // dualize
  auto* dualize = app.add_subcommand("dualize", "Pass between partial coactions of H and partial actions of H*");
  dualize->require_subcommand(1);
  std::string act_path;
  auto* d_to_act = dualize->add_subcommand("coaction-to-action", "Partial H*-action from a partial H-coaction");
  d_to_act->add_option("--H", h_path, "Structure file of H");
  d_to_act->add_option("--C", c_path, "Structure file of C");
  d_to_act->add_option("--rho", rho_path, "Coaction file")->required();
  d_to_act->add_option("-o,--output", out_path, "Action file");
  d_to_act->callback([&] {
    action = [&] {
      const CoactionMap cm = load_coaction(cmd, h_path, c_path, rho_path);
      const ModuleActionMap ma = coaction_to_action(cm);
      Report r(base(rho_path));
      r.merge(check_partial_action(ma, false), "action");
      r.add(info("symmetric", ma.kind() == ActionKind::symmetric_partial));
      r.add(verdict("symmetry_preserved",
                    (ma.kind() == ActionKind::symmetric_partial) == check_partial_coaction(cm, true).passed(),
                    "symmetry flag changed"));
      if (!out_path.empty()) write_text(out_path, write_action(ma));
      return cmd.finish(r);
    };
  });
  auto* d_to_co = dualize->add_subcommand("action-to-coaction", "Partial H-coaction from a partial H*-action");
  d_to_co->add_option("--H", h_path, "Structure file of H")->required();
  d_to_co->add_option("--C", c_path, "Structure file of C")->required();
  d_to_co->add_option("--act", act_path, "Action file")->required();
  d_to_co->add_option("-o,--output", out_path, "Coaction file");
  d_to_co->callback([&] {
    action = [&] {
      const WeakHopf h = cmd.load(h_path).hopf();
      const Coalgebra c = cmd.load(c_path).coalgebra();
      const WeakHopf k = dual_weak_hopf(h);
      ModuleActionMap ma(k, c, parse_action(read_text(act_path), k, c, base(act_path)));
      classify(ma);
      const CoactionMap cm = action_to_coaction(ma, h);
      Report r(base(act_path));
      r.merge(check_partial_coaction(cm, false), "coaction");
      r.add(info("symmetric", check_partial_coaction(cm, true).passed()));
      if (!out_path.empty()) write_text(out_path, write_rho(cm));
      return cmd.finish(r);
    };
  });

  // lambda
  auto* lambda = app.add_subcommand("lambda", "Functionals defining λ-actions");
  lambda->require_subcommand(1);
  std::string lambda_path;
  auto* l_check = lambda->add_subcommand("check", "Compare the λ conditions with the ρ_λ criteria on H*");
  l_check->add_option("--H", h_path, "Structure file of H")->required();
  l_check->add_option("--lambda", lambda_path, "Lambda file")->required();
  l_check->callback([&] {
    action = [&] {
      const WeakHopf h = cmd.load(h_path).hopf();
      const auto lambdas = parse_lambdas(read_text(lambda_path), h, base(lambda_path));
      Report r(base(lambda_path));
      for (std::size_t i = 0; i < lambdas.size(); ++i) {
        r.merge(lambda_equivalence(h, lambdas[i]), "lambda[" + std::to_string(i) + "]");
      }
      return cmd.finish(r);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) return 2;
  try {
    return action();
  } catch (const AxiomFailure& e) {
    cmd.emit(e.report());
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace weakhopf::cli
