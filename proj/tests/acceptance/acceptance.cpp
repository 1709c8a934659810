// Acceptance gate: runs every release criterion at its stated tolerance
// (exact zero everywhere) and prints one pass/fail line per criterion.
// Returns a nonzero exit status if any criterion fails.

#include <llg/char_classes.hpp>
#include <llg/examples.hpp>
#include <llg/identities.hpp>
#include <llg/io.hpp>
#include <llg/verify.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace llg;

namespace {

int g_failures = 0;

void report(int index, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("%s  criterion %d: %s (%.2fs)%s\n", pass ? "PASS" : "FAIL", index,
              what.c_str(), seconds, detail.empty() ? "" : ("  [" + detail + "]").c_str());
  if (!pass) ++g_failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

bool suite_names_pass(const SuiteResult& s, std::initializer_list<const char*> names,
                      std::string* detail) {
  bool ok = true;
  for (const char* name : names) {
    bool found = false;
    for (const auto& c : s.checks) {
      if (c.name == name) {
        found = true;
        if (!c.pass) {
          ok = false;
          *detail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
        }
      }
    }
    if (!found) {
      ok = false;
      *detail = std::string("missing check ") + name;
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string llg_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--llg") llg_path = argv[i + 1];

  const uint64_t seed = 20260809;
  SuiteOptions opt;  // full sizes: 25 connections, 25 frames, 20 instances, 50 jets

  // 1. identity suite on the nilpotent frames and randomized connections
  {
    Timer t;
    std::string detail;
    SuiteResult s = run_identities_suite(seed, opt);
    bool ok = suite_names_pass(
        s,
        {"identity_suite_heisenberg", "identity_suite_engel",
         "identity_suite_random_connections"},
        &detail);
    report(1, "identity suite exact on nilpotent frames and 25 random connections",
           ok, t.elapsed(), detail);

    // 2. frame-derived flatness comes from the same suite run
    Timer t2;
    std::string detail2;
    bool ok2 = suite_names_pass(s, {"frame_flatness_and_suite_random_frames"}, &detail2);
    // library frames
    for (const auto& e : builtin_examples()) {
      if (e.kind != ExampleKind::kFrame) continue;
      if (!curvature_tilde(Connection::from_frame(*e.frame)).is_zero()) {
        ok2 = false;
        detail2 = "library frame " + e.name;
      }
    }
    report(2, "frame-derived connections are tilde-flat (library + 25 random)", ok2,
           t2.elapsed(), detail2);
  }

  SuiteResult complexes = run_complexes_suite(seed + 1, opt);

  // 3. resolution property and the comparison formula
  {
    Timer t;
    std::string detail;
    bool ok = suite_names_pass(complexes,
                               {"dhat_squared_zero_on_flat_examples",
                                "dhat_squared_nonzero_when_not_flat",
                                "box_nabla_comparison_degrees_1_3"},
                               &detail);
    report(3, "exterior derivative squares to zero iff flat; comparison formula",
           ok, t.elapsed(), detail);
  }

  // 4. cohomology with oracle agreement
  {
    Timer t;
    std::string detail;
    bool ok = suite_names_pass(complexes,
                               {"differential_squared_zero",
                                "oracle_rank_kernel_agreement",
                                "cohomology_cross_checks_random",
                                "cohomology_tables_examples"},
                               &detail);
    report(4, "cohomology: D^2=0, degree tables, cross-checks, oracle agreement",
           ok, t.elapsed(), detail);
  }

  // 5. localization consistency
  {
    Timer t;
    std::string detail;
    bool ok = suite_names_pass(complexes, {"localization_consistency"}, &detail);
    report(5, "field-level derivative localizes to the algebraic differential",
           ok, t.elapsed(), detail);
  }

  // 6. characteristic classes
  {
    Timer t;
    std::string detail;
    bool ok = suite_names_pass(complexes,
                               {"torsion_powers_square_and_closedness",
                                "torsion_closed_at_field_level",
                                "trace_chain_map_unimodular",
                                "trace_of_torsion_aff1",
                                "torsion_class_exactness_certificate"},
                               &detail);
    // componentwise square identity on random (not necessarily Jacobi) tables
    Rng rng(seed + 9);
    for (int t2 = 0; t2 < 20 && ok; ++t2) {
      int n = 3 + t2 % 2;
      std::vector<std::tuple<int, int, int, Rational>> entries;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            int v = rng.uniform(-2, 2);
            if (v) entries.emplace_back(i, j, k, Rational(v));
          }
      StructureConstants g = StructureConstants::from_sparse(n, entries);
      AlgebraicCochain expect(n, 3);
      for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
              Rational acc = 0;
              for (int a = 0; a < n; ++a)
                acc += g.at(i, r, a) * g.at(a, j, k) + g.at(i, k, a) * g.at(a, r, j) +
                       g.at(i, j, a) * g.at(a, k, r);
              expect.add({i, r, j, k}, acc);
            }
      if (!(t_power(g, 2) == expect)) {
        ok = false;
        detail = "square identity instance " + std::to_string(t2);
      }
    }
    report(6, "characteristic classes: powers, closedness, traces, exactness", ok,
           t.elapsed(), detail);
  }

  // 7 + 8. deformation logic and the pushforward diagram
  {
    Timer t;
    std::string detail;
    SuiteResult s = run_deformations_suite(seed + 2, opt);
    bool ok7 = suite_names_pass(s,
                                {"velocity_check_matches_derived_algebra",
                                 "semisimple_rigidity",
                                 "five_constancy_verdicts_agree",
                                 "velocity_cocycle_for_first_order_constant",
                                 "velocity_class_constant_abelian",
                                 "generated_families_classify_as_expected",
                                 "acted_connection_tilde_flat"},
                                &detail);
    report(7, "deformation logic on 50 generated jets per algebra", ok7, t.elapsed(),
           detail);

    Timer t8;
    std::string detail8;
    bool ok8 = suite_names_pass(s, {"pushforward_diagram_commutes_constant_jets"},
                                &detail8);
    report(8, "pushforward diagram commutes for constant jets, degrees 0-2", ok8,
           t8.elapsed(), detail8);
  }

  // 9. determinism of the full verification run
  {
    Timer t;
    bool ok = false;
    std::string detail;
    if (!llg_path.empty()) {
      std::string out1 = "acceptance_verify_1.json";
      std::string out2 = "acceptance_verify_2.json";
      std::string cmd1 = llg_path + " verify --suite all --seed 4242 > " + out1;
      std::string cmd2 = llg_path + " verify --suite all --seed 4242 > " + out2;
      int rc1 = std::system(cmd1.c_str());
      int rc2 = std::system(cmd2.c_str());
      std::ifstream f1(out1), f2(out2);
      std::stringstream s1, s2;
      s1 << f1.rdbuf();
      s2 << f2.rdbuf();
      ok = rc1 == 0 && rc2 == 0 && s1.str() == s2.str() && !s1.str().empty();
      if (!ok) detail = "command-line reports differ or failed";
      std::remove(out1.c_str());
      std::remove(out2.c_str());
    } else {
      // in-process fallback: serialize two runs of the suites
      auto dump = [&] {
        std::ostringstream os;
        for (const auto& s : run_all_suites(4242, SuiteOptions{5, 5, 5, 10, 4})) {
          os << s.suite << ":";
          for (const auto& c : s.checks) os << c.name << "=" << c.pass << ";";
        }
        return os.str();
      };
      ok = dump() == dump();
      if (!ok) detail = "in-process runs differ";
    }
    report(9, "seeded verification reports are byte-identical", ok, t.elapsed(),
           detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
