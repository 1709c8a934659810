// Command line front end: parses input files, dispatches to the library and
// emits deterministic JSON or text reports.
//
// Exit codes: 0 ok, 2 parse error, 3 invariant violation, 4 Jacobi failure,
// 5 input is not a local Lie group.

#include <CLI11.hpp>
#include <json.hpp>

#include <llg/char_classes.hpp>
#include <llg/examples.hpp>
#include <llg/identities.hpp>
#include <llg/io.hpp>
#include <llg/verify.hpp>

#include <iostream>

namespace {

using nlohmann::ordered_json;
using namespace llg;

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitJacobi = 4;
constexpr int kExitNotLocalLie = 5;

struct Options {
  std::string input;
  std::string jet_input;
  std::string example;
  std::string jet_example;
  std::string point;
  std::string format = "json";
  std::string suite = "all";
  uint64_t seed = 1;
  int order = 4;
  int max_degree = -1;
};

QVec parse_point(const std::string& text, int n) {
  QVec p(n, Rational(0));
  if (text.empty()) return p;
  size_t pos = 0;
  int idx = 0;
  while (pos != std::string::npos) {
    size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (idx >= n) throw ParseError("point has too many coordinates");
    p[idx++] = parse_rational(tok);
    pos = next == std::string::npos ? next : next + 1;
  }
  if (idx != n) throw ParseError("point has too few coordinates");
  return p;
}

struct LoadedGeometry {
  std::optional<Frame> frame;
  std::optional<Connection> conn;
  std::optional<StructureConstants> constants;
};

LoadedGeometry load_geometry(const Options& opt) {
  LoadedGeometry out;
  if (!opt.example.empty()) {
    const ExampleEntry* e = find_example(opt.example);
    if (!e) throw ParseError("unknown example: " + opt.example);
    if (e->kind == ExampleKind::kFrame) {
      out.frame = e->frame;
      out.conn = Connection::from_frame(*e->frame);
    } else if (e->kind == ExampleKind::kConstants) {
      out.constants = e->constants;
    } else {
      throw ParseError("example '" + opt.example + "' is a gauge jet");
    }
    return out;
  }
  if (opt.input.empty()) throw ParseError("no input file or --example given");
  std::string text = read_file(opt.input);
  // dispatch on content
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  if (j.contains("frame")) {
    out.frame = parse_frame_json(text);
    out.conn = Connection::from_frame(*out.frame);
  } else if (j.contains("gamma")) {
    out.conn = parse_connection_json(text);
  } else if (j.contains("c")) {
    out.constants = parse_constants_json(text);
  } else {
    throw ParseError("input is neither a frame, a connection nor constants");
  }
  return out;
}

GaugeJet load_jet(const Options& opt) {
  if (!opt.jet_example.empty()) {
    const ExampleEntry* e = find_example(opt.jet_example);
    if (!e || e->kind != ExampleKind::kJet)
      throw ParseError("unknown jet example: " + opt.jet_example);
    return *e->jet;
  }
  if (opt.jet_input.empty()) throw ParseError("no jet file given");
  return parse_jet_json(read_file(opt.jet_input));
}

ordered_json tensor_entries(const Tensor& t) {
  ordered_json list = ordered_json::array();
  for (const auto& [idx, p] : t.components()) {
    ordered_json e;
    ordered_json ix = ordered_json::array();
    for (int q : idx) ix.push_back(q + 1);
    e["index"] = ix;
    e["val"] = p.str();
    list.push_back(e);
  }
  return list;
}

ordered_json cochain_entries(const AlgebraicCochain& w) {
  ordered_json list = ordered_json::array();
  for (const auto& [idx, v] : w.components()) {
    bool increasing = true;
    for (size_t q = 2; q < idx.size(); ++q)
      if (idx[q - 1] >= idx[q]) increasing = false;
    if (!increasing) continue;
    ordered_json e;
    ordered_json ix = ordered_json::array();
    for (int q : idx) ix.push_back(q + 1);
    e["index"] = ix;
    e["val"] = to_string(v);
    list.push_back(e);
  }
  return list;
}

void emit(const Options& opt, const ordered_json& report) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // text: flat deterministic key: value listing
  std::function<void(const std::string&, const ordered_json&)> walk =
      [&](const std::string& prefix, const ordered_json& node) {
        if (node.is_object()) {
          for (auto it = node.begin(); it != node.end(); ++it)
            walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        } else if (node.is_array()) {
          int q = 0;
          for (const auto& item : node) walk(prefix + "[" + std::to_string(q++) + "]", item);
        } else {
          std::cout << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
                    << "\n";
        }
      };
  walk("", report);
}

int cmd_analyze(const Options& opt) {
  LoadedGeometry geo = load_geometry(opt);
  if (!geo.conn) throw ParseError("analyze needs a frame or connection input");
  const Connection& c = *geo.conn;
  int n = c.dim();
  QVec p = parse_point(opt.point, n);

  ordered_json rep;
  rep["command"] = "analyze";
  rep["n"] = n;
  rep["frame_derived"] = c.frame_derived();
  rep["gamma"] = tensor_entries(c.gamma());
  Tensor T = torsion(c);
  rep["torsion"] = tensor_entries(T);
  Tensor rt = curvature_tilde(c);
  Tensor rh = curvature_hat(c);
  LocalLieVerdict v = is_local_lie_group(c);
  rep["tilde_flat"] = v.tilde_flat;
  rep["hat_flat"] = v.hat_flat;
  rep["nabla_torsion_zero"] = v.nabla_torsion_zero;
  rep["local_lie_group"] = v.is_local_lie_group();
  if (!v.tilde_flat) rep["tilde_curvature"] = tensor_entries(rt);
  if (!v.hat_flat) rep["hat_curvature"] = tensor_entries(rh);

  IdentityReport ids = run_identity_suite(c, opt.seed, geo.frame ? &*geo.frame : nullptr);
  ordered_json idlist = ordered_json::array();
  for (const auto& r : ids.results) {
    ordered_json e;
    e["name"] = r.name;
    e["holds"] = r.holds;
    if (!r.witness.empty()) e["witness"] = r.witness;
    idlist.push_back(e);
  }
  rep["identities"] = idlist;

  StructureConstants g = localize(T, p);
  ordered_json loc;
  loc["jacobi"] = g.jacobi_ok();
  ordered_json cl = ordered_json::array();
  for (const auto& [i, jj, k, val] : g.sparse()) {
    ordered_json e;
    e["i"] = i + 1;
    e["j"] = jj + 1;
    e["k"] = k + 1;
    e["val"] = to_string(val);
    cl.push_back(e);
  }
  loc["c"] = cl;
  rep["localized"] = loc;
  emit(opt, rep);
  return 0;
}

int cmd_cohomology(const Options& opt) {
  LoadedGeometry geo = load_geometry(opt);
  StructureConstants g = [&] {
    if (geo.constants) return *geo.constants;
    if (geo.conn) {
      QVec p = parse_point(opt.point, geo.conn->dim());
      return localize(torsion(*geo.conn), p);
    }
    throw ParseError("cohomology needs constants, a frame or a connection");
  }();
  int maxdeg = opt.max_degree < 0 ? g.dim() : opt.max_degree;

  CohomologyReport rep = cohomology(g, maxdeg);
  ordered_json out;
  out["command"] = "cohomology";
  out["n"] = g.dim();
  out["max_degree"] = maxdeg;
  ordered_json table = ordered_json::array();
  for (const auto& d : rep.by_degree) {
    ordered_json e;
    e["degree"] = d.degree;
    e["space_dim"] = d.space_dim;
    e["rank"] = d.rank;
    e["kernel_dim"] = d.kernel_dim;
    e["h_dim"] = d.h_dim;
    ordered_json reps = ordered_json::array();
    for (const auto& r : d.representatives) reps.push_back(cochain_entries(r));
    e["representatives"] = reps;
    table.push_back(e);
  }
  out["table"] = table;
  out["center_dim"] = static_cast<int>(center(g).size());
  out["derivations_dim"] = static_cast<int>(derivations(g).size());
  out["inner_derivations_dim"] = static_cast<int>(inner_derivations(g).size());
  if (maxdeg == g.dim()) out["euler_characteristic"] = rep.euler_characteristic();
  // oracle agreement per degree
  ordered_json oracle = ordered_json::array();
  for (int k = 0; k < std::min(maxdeg + 1, g.dim()); ++k) {
    ordered_json e;
    e["degree"] = k;
    e["rank_agrees"] = rank(differential_matrix(g, k)) == rank(ce_oracle_matrix(g, k));
    oracle.push_back(e);
  }
  out["oracle_agreement"] = oracle;
  emit(opt, out);
  return 0;
}

int cmd_classes(const Options& opt) {
  LoadedGeometry geo = load_geometry(opt);
  ordered_json out;
  out["command"] = "classes";

  std::optional<Connection> conn = geo.conn;
  StructureConstants g = [&] {
    if (geo.constants) return *geo.constants;
    QVec p = parse_point(opt.point, conn->dim());
    return localize(torsion(*conn), p);
  }();
  if (conn) {
    LocalLieVerdict v = is_local_lie_group(*conn);
    if (!v.hat_flat)
      throw NotLocalLieError("characteristic classes need a local Lie group");
  }
  if (!g.jacobi_ok()) throw JacobiError("localized bracket fails the Jacobi identity");

  int n = g.dim();
  out["n"] = n;
  ordered_json powers = ordered_json::array();
  for (int power = 1; power + 1 <= n; ++power) {
    ordered_json e;
    e["power"] = power;
    AlgebraicCochain tp = t_power(g, power);
    e["degree"] = power + 1;
    e["cochain"] = cochain_entries(tp);
    e["vanishes"] = tp.is_zero();
    e["point_closed"] = differential_D(g, tp).is_zero();
    if (conn) {
      Tensor tpf = t_power_field(torsion(*conn), power);
      e["field_closed"] = d_hat(*conn, tpf).is_zero();
    }
    if (!tp.is_zero()) {
      ExactnessResult ex = class_is_exact(g, tp);
      e["exact"] = ex.exact;
      if (ex.exact) e["certificate"] = cochain_entries(ex.certificate);
    }
    ScalarCochain tr = trace_map(tp);
    ordered_json trj = ordered_json::array();
    for (const auto& [idx, val] : tr.components()) {
      bool increasing = true;
      for (size_t q = 1; q < idx.size(); ++q)
        if (idx[q - 1] >= idx[q]) increasing = false;
      if (!increasing) continue;
      ordered_json te;
      ordered_json ix = ordered_json::array();
      for (int q : idx) ix.push_back(q + 1);
      te["index"] = ix;
      te["val"] = to_string(val);
      trj.push_back(te);
    }
    e["trace"] = trj;
    powers.push_back(e);
  }
  out["powers"] = powers;
  // torsion trace as a 1-form (power 1) shown explicitly
  {
    ScalarCochain tr = trace_map(t_power(g, 1));
    ordered_json v = ordered_json::array();
    for (int j = 0; j < n; ++j) v.push_back(to_string(tr.at({j})));
    out["torsion_trace"] = v;
  }
  emit(opt, out);
  return 0;
}

int cmd_deform(const Options& opt) {
  LoadedGeometry geo = load_geometry(opt);
  if (!geo.conn) throw ParseError("deform needs a frame or connection input");
  Connection c = *geo.conn;
  GaugeJet jet = load_jet(opt);
  if (jet.dim() != c.dim()) throw ParseError("jet and base dimension mismatch");
  int n = c.dim();
  QVec p = parse_point(opt.point, n);

  LocalLieVerdict v = is_local_lie_group(c);
  if (!v.hat_flat) throw NotLocalLieError("deformation base must be a local Lie group");

  ordered_json out;
  out["command"] = "deform";
  out["n"] = n;
  out["order"] = jet.order();

  ValidityReport vr = validity(jet, c, p);
  out["validity_order"] = vr.validity_order;
  ordered_json vel = ordered_json::array();
  for (size_t m = 0; m < vr.velocity_annihilates_torsion.size(); ++m) {
    ordered_json e;
    e["order"] = static_cast<int>(m + 1);
    e["annihilates_torsion"] = vr.velocity_annihilates_torsion[m];
    e["kills_derived_algebra"] = vr.velocity_kills_derived[m];
    vel.push_back(e);
  }
  out["velocity_checks"] = vel;

  TensorJet delta = constancy_defect(jet, c);
  int corder = constancy_order(delta);
  out["constancy_order"] = corder;

  KappaReport kap = kappa(jet, c);
  ordered_json kl = ordered_json::array(), kc = ordered_json::array();
  for (int m = 0; m <= jet.order(); ++m) {
    kl.push_back(kap.literal.coeff(m).is_zero());
    kc.push_back(kap.conjugated.coeff(m).is_zero());
  }
  out["kappa_literal_zero_by_order"] = kl;
  out["kappa_conjugated_zero_by_order"] = kc;
  ordered_json l15t = ordered_json::array(), l150 = ordered_json::array();
  for (bool b : kap.derivative_parallel_t) l15t.push_back(b);
  for (bool b : kap.derivative_parallel_0) l150.push_back(b);
  out["kappa_derivative_parallel_deformed"] = l15t;
  out["kappa_derivative_parallel_base"] = l150;

  Prop17Report p17 = prop17_report(jet, c, p);
  ordered_json pj;
  pj["constant"] = p17.constant;
  pj["kappa_zero"] = p17.kappa_zero;
  pj["kappa_zero_at_point"] = p17.kappa_zero_at_p;
  pj["derivative_zero"] = p17.derivative_zero;
  pj["derivative_zero_at_point"] = p17.derivative_zero_at_p;
  pj["agree"] = p17.agree();
  out["constancy_equivalents"] = pj;

  StructureConstants g = localize(torsion(c), p);
  RigidityReport rig = semisimple_rigidity(jet, g);
  ordered_json rj;
  rj["derived_is_whole"] = rig.derived_is_whole;
  rj["first_violating_order"] = rig.first_violating_order;
  rj["rejected"] = rig.rejected();
  out["rigidity"] = rj;

  if (corder >= 1) {
    KsCocycle ks = ks_cocycle(jet, c);
    ordered_json kj;
    kj["is_cocycle"] = ks.is_cocycle;
    kj["is_invariant"] = ks.is_invariant;
    if (ks.is_cocycle) {
      KsClass cls = ks_class(ks.mu, g, p, c);
      kj["complex"] = ks.is_invariant ? "invariant" : "resolution";
      ordered_json coords = ordered_json::array();
      for (const auto& x : cls.coordinates) coords.push_back(to_string(x));
      kj["class_coordinates"] = coords;
      kj["zero_class"] = cls.zero_class;
      if (cls.zero_class) kj["certificate"] = cochain_entries(cls.certificate);
    }
    out["velocity_cocycle"] = kj;
  } else {
    out["velocity_cocycle"] = "not defined: constancy fails at order one";
  }

  if (geo.frame) {
    ordered_json dj = ordered_json::array();
    for (const auto& chk : diagram_checks(jet, *geo.frame, opt.seed)) {
      ordered_json e;
      e["degree"] = chk.degree;
      e["commutes"] = chk.commutes;
      dj.push_back(e);
    }
    out["pushforward_diagram"] = dj;
  }
  emit(opt, out);
  return 0;
}

int cmd_verify(const Options& opt) {
  SuiteOptions sopt;
  std::vector<SuiteResult> results;
  if (opt.suite == "identities")
    results.push_back(run_identities_suite(opt.seed, sopt));
  else if (opt.suite == "complexes")
    results.push_back(run_complexes_suite(opt.seed, sopt));
  else if (opt.suite == "deformations")
    results.push_back(run_deformations_suite(opt.seed, sopt));
  else if (opt.suite == "all")
    results = run_all_suites(opt.seed, sopt);
  else
    throw ParseError("unknown suite: " + opt.suite);

  ordered_json out;
  out["command"] = "verify";
  out["seed"] = opt.seed;
  bool all = true;
  ordered_json suites = ordered_json::array();
  for (const auto& s : results) {
    ordered_json sj;
    sj["suite"] = s.suite;
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      if (!c.detail.empty()) e["detail"] = c.detail;
      checks.push_back(e);
      all = all && c.pass;
    }
    sj["checks"] = checks;
    sj["pass"] = s.all_pass();
    suites.push_back(sj);
  }
  out["suites"] = suites;
  out["pass"] = all;
  emit(opt, out);
  return all ? 0 : 1;
}

int cmd_examples(const Options& opt) {
  ordered_json out;
  out["command"] = "examples";
  ordered_json list = ordered_json::array();
  for (const auto& e : builtin_examples()) {
    ordered_json j;
    j["name"] = e.name;
    j["kind"] = e.kind == ExampleKind::kFrame      ? "frame"
                : e.kind == ExampleKind::kConstants ? "constants"
                                                    : "jet";
    if (!e.base.empty()) j["base"] = e.base;
    list.push_back(j);
  }
  out["examples"] = list;
  emit(opt, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of parallelisms, their cohomology and gauge deformations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", opt.input, "input file (JSON)");
    sub->add_option("--example", opt.example, "use a built-in example instead of a file");
    sub->add_option("--point", opt.point, "base point, comma separated rationals");
    sub->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "seed for sampled checks");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "connection, torsion, flatness and identity report");
  add_common(analyze, true);
  CLI::App* cohom = app.add_subcommand("cohomology", "deformation cohomology of the localized bracket");
  add_common(cohom, true);
  cohom->add_option("--max-degree", opt.max_degree, "largest cochain degree");
  CLI::App* classes = app.add_subcommand("classes", "torsion powers, closedness, exactness, traces");
  add_common(classes, true);
  CLI::App* deform = app.add_subcommand("deform", "gauge jet analysis over a flat base");
  add_common(deform, true);
  deform->add_option("--jet", opt.jet_input, "gauge jet file (JSON)");
  deform->add_option("--jet-example", opt.jet_example, "built-in jet example");
  deform->add_option("--order", opt.order, "jet order when generating");
  CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
  verify->add_option("--suite", opt.suite, "identities|complexes|deformations|all");
  verify->add_option("--seed", opt.seed, "suite seed");
  verify->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  CLI::App* examples = app.add_subcommand("examples", "list built-in examples");
  examples->add_option("--format", opt.format, "json|text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(opt);
    if (cohom->parsed()) return cmd_cohomology(opt);
    if (classes->parsed()) return cmd_classes(opt);
    if (deform->parsed()) return cmd_deform(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (examples->parsed()) return cmd_examples(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const JacobiError& e) {
    std::cerr << "jacobi failure: " << e.what() << "\n";
    return kExitJacobi;
  } catch (const NotLocalLieError& e) {
    std::cerr << "not a local Lie group: " << e.what() << "\n";
    return kExitNotLocalLie;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
