#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace llg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct SuiteOptions {
  int identity_connections = 25;  // randomized raw connections
  int identity_frames = 25;       // randomized unimodular frames
  int complex_instances = 20;     // randomized Jacobi constants
  int jets_per_algebra = 50;      // generated gauge jets
  int jet_order = 4;
};

SuiteResult run_identities_suite(uint64_t seed, const SuiteOptions& opt = {});
SuiteResult run_complexes_suite(uint64_t seed, const SuiteOptions& opt = {});
SuiteResult run_deformations_suite(uint64_t seed, const SuiteOptions& opt = {});
std::vector<SuiteResult> run_all_suites(uint64_t seed, const SuiteOptions& opt = {});

}  // namespace llg
