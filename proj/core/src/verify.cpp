#include <llg/verify.hpp>

#include <llg/char_classes.hpp>
#include <llg/examples.hpp>
#include <llg/identities.hpp>

#include <sstream>

namespace llg {

namespace {

void add(SuiteResult& s, const std::string& name, bool pass, std::string detail = "") {
  s.checks.push_back({name, pass, std::move(detail)});
}

std::string fail_names(const IdentityReport& rep) {
  std::string out;
  for (const auto& r : rep.results)
    if (!r.holds) out += (out.empty() ? "" : ", ") + r.name;
  return out;
}

}  // namespace

SuiteResult run_identities_suite(uint64_t seed, const SuiteOptions& opt) {
  SuiteResult s{"identities", seed, {}};
  Rng rng(seed);

  {
    Frame f = heisenberg_frame();
    Connection c = Connection::from_frame(f);
    IdentityReport rep = run_identity_suite(c, rng.next(), &f);
    add(s, "identity_suite_heisenberg", rep.all_hold(), fail_names(rep));
  }
  {
    Frame f = engel_frame();
    Connection c = Connection::from_frame(f);
    IdentityReport rep = run_identity_suite(c, rng.next(), &f);
    add(s, "identity_suite_engel", rep.all_hold(), fail_names(rep));
  }
  {
    Frame f = nonflat_frame();
    Connection c = Connection::from_frame(f);
    IdentityReport rep = run_identity_suite(c, rng.next(), &f);
    add(s, "identity_suite_nonflat_frame", rep.all_hold(), fail_names(rep));
  }

  bool raw_ok = true;
  std::string raw_detail;
  for (int t = 0; t < opt.identity_connections; ++t) {
    int n = 2 + t % 3;
    Connection c = Connection::raw(random_gamma(rng, n, 2));
    IdentityReport rep = run_identity_suite(c, rng.next());
    if (!rep.all_hold()) {
      raw_ok = false;
      raw_detail = "instance " + std::to_string(t) + ": " + fail_names(rep);
      break;
    }
  }
  add(s, "identity_suite_random_connections", raw_ok, raw_detail);

  bool frames_ok = true;
  std::string frame_detail;
  for (int t = 0; t < opt.identity_frames; ++t) {
    int n = 2 + t % 3;
    Frame f = random_unimodular_frame(rng, n, t % 2 == 0 ? 1 : 2);
    Connection c = Connection::from_frame(f);
    if (!curvature_tilde(c).is_zero()) {
      frames_ok = false;
      frame_detail = "tilde flatness failed on random frame " + std::to_string(t);
      break;
    }
    IdentityReport rep = run_identity_suite(c, rng.next(), &f);
    if (!rep.all_hold()) {
      frames_ok = false;
      frame_detail = "instance " + std::to_string(t) + ": " + fail_names(rep);
      break;
    }
  }
  add(s, "frame_flatness_and_suite_random_frames", frames_ok, frame_detail);

  return s;
}

namespace {

Tensor random_form(Rng& rng, int n, int k) {
  AlgebraicCochain seed = random_cochain(rng, n, k);
  Tensor t(n, 1, k, k);
  for (const auto& [idx, v] : seed.components()) {
    TIndex ti(idx.begin(), idx.end());
    t.set(ti, Poly::constant(n, v));
  }
  // polynomial dressing: multiply everything by a random low-degree scalar
  Poly dress = random_poly(rng, n, 1, 70) + Poly::constant(n, 1);
  Tensor out(n, 1, k, k);
  for (const auto& [idx, v] : t.components()) out.set(idx, v * dress);
  return out;
}

bool comparison_identity_holds(const Connection& c, const Tensor& omega) {
  // box = d-hat + alternated torsion-value correction + alternated lower
  // gamma corrections
  int n = c.dim();
  int k = omega.lower();
  Tensor T = torsion(c);
  const Tensor& g = c.gamma();
  Tensor tcorr(n, 1, k + 1, k), gcorr(n, 1, k + 1, k);
  tcorr.for_each_index([&](const TIndex& idx) {
    int i = idx[0], r = idx[1];
    Poly acc(n);
    for (int a = 0; a < n; ++a) {
      TIndex sub{a};
      sub.insert(sub.end(), idx.begin() + 2, idx.end());
      acc += T.at({i, a, r}) * omega.at(sub);
    }
    if (!acc.is_zero()) tcorr.set(idx, std::move(acc));
  });
  gcorr.for_each_index([&](const TIndex& idx) {
    int i = idx[0], r = idx[1];
    Poly acc(n);
    for (int q = 0; q < k; ++q)
      for (int a = 0; a < n; ++a) {
        TIndex sub{i};
        sub.insert(sub.end(), idx.begin() + 2, idx.end());
        sub[1 + q] = a;
        acc += g.at({a, r, idx[2 + q]}) * omega.at(sub);
      }
    if (!acc.is_zero()) gcorr.set(idx, std::move(acc));
  });
  Tensor rhs = d_hat(c, omega) + alternate_first_unchecked(tcorr) +
               alternate_first_unchecked(gcorr);
  return (box_nabla(c, omega) - rhs).is_zero();
}

}  // namespace

SuiteResult run_complexes_suite(uint64_t seed, const SuiteOptions& opt) {
  SuiteResult s{"complexes", seed, {}};
  Rng rng(seed);

  // d-hat squared on the flat examples, plus the sanity direction.
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"abelian-2", "heisenberg-3", "engel-4"}) {
      const ExampleEntry* e = find_example(name);
      Connection c = Connection::from_frame(*e->frame);
      for (int k = 0; k <= 2 && ok; ++k) {
        Tensor w = random_form(rng, c.dim(), k);
        if (!d_hat(c, d_hat(c, w)).is_zero()) {
          ok = false;
          detail = std::string(name) + " degree " + std::to_string(k);
        }
      }
    }
    add(s, "dhat_squared_zero_on_flat_examples", ok, detail);
  }
  {
    Connection c = Connection::from_frame(nonflat_frame());
    Tensor w = random_form(rng, 3, 1);
    add(s, "dhat_squared_nonzero_when_not_flat",
        !d_hat(c, d_hat(c, w)).is_zero());
  }

  // Comparison of the alternated covariant derivative with d-hat.
  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 8 && ok; ++t) {
      int n = 3 + t % 2;
      Connection c = t % 2 == 0
                         ? Connection::from_frame(random_unimodular_frame(rng, n, 1))
                         : Connection::raw(random_gamma(rng, n, 1));
      for (int k = 1; k <= 3 && ok; ++k) {
        if (k > n - 1) continue;
        Tensor w = random_form(rng, n, k);
        if (!comparison_identity_holds(c, w)) {
          ok = false;
          detail = "instance " + std::to_string(t) + " degree " + std::to_string(k);
        }
      }
    }
    add(s, "box_nabla_comparison_degrees_1_3", ok, detail);
  }

  // Algebraic complex: D squared, oracle agreement, cohomology tables.
  {
    bool dd_ok = true, oracle_ok = true, h_ok = true;
    std::string detail_dd, detail_or, detail_h;
    for (int t = 0; t < opt.complex_instances; ++t) {
      int n = 3 + t % 2;
      StructureConstants g = random_jacobi_constants(rng, n);
      for (int k = 0; k + 2 <= n && dd_ok; ++k) {
        AlgebraicCochain w = random_cochain(rng, n, k);
        if (!differential_D(g, differential_D(g, w)).is_zero()) {
          dd_ok = false;
          detail_dd = "instance " + std::to_string(t) + " degree " + std::to_string(k);
        }
      }
      for (int k = 0; k < n && oracle_ok; ++k) {
        QMat d = differential_matrix(g, k);
        QMat o = ce_oracle_matrix(g, k);
        int rd = rank(d), ro = rank(o);
        int kd = AlgebraicCochain::space_dim(n, k) - rd;
        int ko = AlgebraicCochain::space_dim(n, k) - ro;
        if (rd != ro || kd != ko) {
          oracle_ok = false;
          detail_or = "instance " + std::to_string(t) + " degree " + std::to_string(k);
        }
      }
      CohomologyReport rep = cohomology(g, n);
      int h0 = rep.by_degree[0].h_dim;
      int h1 = rep.by_degree[1].h_dim;
      int zc = static_cast<int>(center(g).size());
      int der = static_cast<int>(derivations(g).size());
      int inn = static_cast<int>(inner_derivations(g).size());
      if (h0 != zc || h1 != der - inn || rep.euler_characteristic() != 0) {
        h_ok = false;
        detail_h = "instance " + std::to_string(t);
      }
    }
    add(s, "differential_squared_zero", dd_ok, detail_dd);
    add(s, "oracle_rank_kernel_agreement", oracle_ok, detail_or);
    add(s, "cohomology_cross_checks_random", h_ok, detail_h);
  }

  // Frozen tables for the example algebras.
  {
    auto dims = [](const StructureConstants& g) {
      CohomologyReport rep = cohomology(g, g.dim());
      std::vector<int> h;
      for (const auto& d : rep.by_degree) h.push_back(d.h_dim);
      return h;
    };
    bool ok = dims(heisenberg_constants()) == std::vector<int>{1, 4, 5, 2} &&
              dims(sl2_constants()) == std::vector<int>{0, 0, 0, 0} &&
              dims(abelian_constants(2)) == std::vector<int>{2, 4, 2} &&
              dims(engel_constants()) == std::vector<int>{1, 4, 6, 5, 2} &&
              dims(aff1_constants()) == std::vector<int>{0, 0, 0};
    add(s, "cohomology_tables_examples", ok);
  }

  // Localization consistency on the flat frames.
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"heisenberg-3", "engel-4"}) {
      const ExampleEntry* e = find_example(name);
      Frame f = *e->frame;
      Connection c = Connection::from_frame(f);
      int n = f.dim();
      QVec p(n, Rational(0));
      StructureConstants g = localize(torsion(c), p);
      for (int k = 0; k <= 2 && ok; ++k) {
        AlgebraicCochain wp = random_cochain(rng, n, k);
        Tensor seed_t(n, 1, k, k);
        for (const auto& [idx, v] : wp.components()) {
          TIndex ti(idx.begin(), idx.end());
          seed_t.set(ti, Poly::constant(n, v));
        }
        Tensor ext = invariant_extension(f, seed_t, p);
        Tensor field = d_hat(c, ext);
        AlgebraicCochain alg = differential_D(g, wp);
        bool match = true;
        field.for_each_index([&](const TIndex& idx) {
          std::vector<int> key(idx.begin(), idx.end());
          if (field.at(idx).eval(p) != alg.at(key)) match = false;
        });
        if (!match) {
          ok = false;
          detail = std::string(name) + " degree " + std::to_string(k);
        }
      }
    }
    add(s, "localization_consistency", ok, detail);
  }

  // Characteristic classes.
  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < opt.complex_instances && ok; ++t) {
      int n = 3 + t % 2;
      StructureConstants g = random_jacobi_constants(rng, n);
      // squared torsion equals the nested-bracket form, and vanishes
      AlgebraicCochain t2 = t_power(g, 2);
      if (!t2.is_zero()) {
        ok = false;
        detail = "square instance " + std::to_string(t);
      }
      if (n >= 4 && !t_power(g, 3).is_zero()) {
        // nothing asserted here: the cube need not vanish; closedness is.
        AlgebraicCochain t3 = t_power(g, 3);
        if (!differential_D(g, t3).is_zero()) {
          ok = false;
          detail = "cube closedness instance " + std::to_string(t);
        }
      }
      if (!differential_D(g, t_power(g, 1)).is_zero()) {
        ok = false;
        detail = "torsion closedness instance " + std::to_string(t);
      }
    }
    add(s, "torsion_powers_square_and_closedness", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"heisenberg-3", "engel-4"}) {
      const ExampleEntry* e = find_example(name);
      Connection c = Connection::from_frame(*e->frame);
      if (!d_hat(c, torsion(c)).is_zero()) {
        ok = false;
        detail = name;
      }
    }
    add(s, "torsion_closed_at_field_level", ok, detail);
  }
  {
    // trace chain map (unimodular examples), and the frozen aff1 trace
    bool ok = true;
    std::string detail;
    std::vector<StructureConstants> algebras = {
        heisenberg_constants(), engel_constants(), sl2_constants(),
        abelian_constants(3)};
    int checked = 0;
    while (checked < opt.complex_instances) {
      for (const auto& g : algebras) {
        int n = g.dim();
        for (int k = 1; k < n && ok; ++k) {
          AlgebraicCochain w = random_cochain(rng, n, k);
          ScalarCochain lhs = trace_map(differential_D(g, w));
          ScalarCochain rhs = scalar_differential(g, trace_map(w));
          if (!(lhs == rhs)) {
            ok = false;
            detail = "degree " + std::to_string(k);
          }
        }
        ++checked;
      }
    }
    ScalarCochain tr1 = trace_map(t_power(aff1_constants(), 1));
    bool aff_ok = tr1.at({0}) == 1 && tr1.at({1}) == 0;
    add(s, "trace_chain_map_unimodular", ok, detail);
    add(s, "trace_of_torsion_aff1", aff_ok);
  }
  {
    // the torsion class is exact, certified by the identity matrix
    StructureConstants g = heisenberg_constants();
    ExactnessResult r = class_is_exact(g, t_power(g, 1));
    bool ok = r.exact && differential_D(g, r.certificate) == t_power(g, 1);
    add(s, "torsion_class_exactness_certificate", ok);
  }

  return s;
}

SuiteResult run_deformations_suite(uint64_t seed, const SuiteOptions& opt) {
  SuiteResult s{"deformations", seed, {}};
  Rng rng(seed);
  int K = opt.jet_order;

  struct AlgebraSetup {
    std::string name;
    Frame frame;
    Connection conn;
    StructureConstants constants;
  };
  std::vector<AlgebraSetup> algebras;
  algebras.push_back({"abelian-2", abelian_frame(2),
                      Connection::from_frame(abelian_frame(2)), abelian_constants(2)});
  algebras.push_back({"heisenberg-3", heisenberg_frame(),
                      Connection::from_frame(heisenberg_frame()), heisenberg_constants()});

  bool equiv_ok = true, prop17_ok = true, prop18_ok = true, diag_ok = true;
  bool rarefy_ok = true, lemma_ok = true, family_ok = true;
  std::string detail_equiv, detail_p17, detail_p18, detail_diag, detail_tf, detail_lm,
      detail_fam;

  for (const auto& alg : algebras) {
    int n = alg.conn.dim();
    QVec p(n, Rational(0));
    for (int t = 0; t < opt.jets_per_algebra; ++t) {
      bool want_constant = t % 2 == 0;
      GaugeJet jet = family_jet(rng, alg.name, n, K, want_constant);

      ValidityReport vr = validity(jet, alg.conn, p);
      for (size_t m = 0; m < vr.velocity_annihilates_torsion.size(); ++m) {
        if (vr.velocity_annihilates_torsion[m] != vr.velocity_kills_derived[m]) {
          equiv_ok = false;
          detail_equiv = alg.name + " jet " + std::to_string(t);
        }
      }
      if (!vr.tilde_flat_all_orders) {
        rarefy_ok = false;
        detail_tf = alg.name + " jet " + std::to_string(t);
      }
      if (vr.validity_order != K) {
        family_ok = false;
        detail_fam = alg.name + " family jet " + std::to_string(t) + " not valid";
      }

      TensorJet delta = constancy_defect(jet, alg.conn);
      int corder = constancy_order(delta);
      if (want_constant && corder != K) {
        family_ok = false;
        detail_fam = alg.name + " constant-family jet " + std::to_string(t);
      }

      Prop17Report p17 = prop17_report(jet, alg.conn, p);
      if (!p17.agree()) {
        prop17_ok = false;
        detail_p17 = alg.name + " jet " + std::to_string(t);
      }

      if (corder >= 1) {
        KsCocycle ks = ks_cocycle(jet, alg.conn);
        if (!ks.is_cocycle) {
          prop18_ok = false;
          detail_p18 = alg.name + " jet " + std::to_string(t);
        }
      }

      if (vr.validity_order == K) {
        KappaReport kap = kappa(jet, alg.conn);
        for (bool b : kap.derivative_parallel_0)
          if (!b) {
            lemma_ok = false;
            detail_lm = alg.name + " jet " + std::to_string(t);
          }
      }

      if (want_constant && corder == K && t % 10 == 0) {
        for (const auto& chk : diagram_checks(jet, alg.frame, rng.next())) {
          if (!chk.commutes) {
            diag_ok = false;
            detail_diag = alg.name + " jet " + std::to_string(t) + " degree " +
                          std::to_string(chk.degree);
          }
        }
      }
    }
  }

  // sl2 rigidity: every nontrivial jet is rejected by the velocity check.
  bool rigidity_ok = true;
  std::string detail_rig;
  {
    StructureConstants g = sl2_constants();
    for (int t = 0; t < opt.jets_per_algebra; ++t) {
      GaugeJet jet = random_jet(rng, 3, K, 1);
      bool trivial = true;
      for (int m = 1; m <= K; ++m)
        if (!carrier_is_zero(jet.coeff(m))) trivial = false;
      RigidityReport rep = semisimple_rigidity(jet, g);
      if (!rep.derived_is_whole) {
        rigidity_ok = false;
        detail_rig = "derived algebra not whole";
      }
      if (!trivial && !rep.rejected()) {
        rigidity_ok = false;
        detail_rig = "nontrivial jet " + std::to_string(t) + " accepted";
      }
      if (trivial && rep.rejected()) {
        rigidity_ok = false;
        detail_rig = "identity jet rejected";
      }
    }
  }

  add(s, "velocity_check_matches_derived_algebra", equiv_ok, detail_equiv);
  add(s, "acted_connection_tilde_flat", rarefy_ok, detail_tf);
  add(s, "generated_families_classify_as_expected", family_ok, detail_fam);
  add(s, "five_constancy_verdicts_agree", prop17_ok, detail_p17);
  add(s, "velocity_cocycle_for_first_order_constant", prop18_ok, detail_p18);
  add(s, "derivative_of_pullback_defect_parallel", lemma_ok, detail_lm);
  add(s, "pushforward_diagram_commutes_constant_jets", diag_ok, detail_diag);
  add(s, "semisimple_rigidity", rigidity_ok, detail_rig);

  // The constant abelian direction recovers its own velocity as a class.
  {
    PolyMat a = poly_mat_zero(2);
    a[0][1] = Poly::constant(2, 1);
    a[1][0] = Poly::constant(2, -2);
    GaugeJet jet = GaugeJet::linear(2, K, a);
    Connection c = Connection::from_frame(abelian_frame(2));
    QVec p(2, Rational(0));
    KsClass cls = ks_class(a, abelian_constants(2), p, c);
    // abelian: every matrix is its own class; coordinates follow the basis
    AlgebraicCochain mu(2, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) mu.add({i, j}, a[i][j].eval(p));
    bool ok = cls.defined && !cls.zero_class;
    CohomologyReport rep = cohomology(abelian_constants(2), 1);
    QVec recon(AlgebraicCochain::space_dim(2, 1), Rational(0));
    for (size_t r = 0; r < cls.coordinates.size(); ++r) {
      QVec col = rep.by_degree[1].representatives[r].coordinates();
      for (size_t i = 0; i < recon.size(); ++i) recon[i] += cls.coordinates[r] * col[i];
    }
    ok = ok && recon == mu.coordinates();
    (void)jet;
    add(s, "velocity_class_constant_abelian", ok);
  }

  return s;
}

std::vector<SuiteResult> run_all_suites(uint64_t seed, const SuiteOptions& opt) {
  return {run_identities_suite(seed, opt), run_complexes_suite(seed + 1, opt),
          run_deformations_suite(seed + 2, opt)};
}

}  // namespace llg
