#pragma once

#include <llg/connection.hpp>
#include <llg/rng.hpp>

#include <string>
#include <vector>

namespace llg {

struct IdentityResult {
  std::string name;
  bool holds = false;
  // Offending component description when the identity fails.
  std::string witness;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_hold() const {
    for (const auto& r : results)
      if (!r.holds) return false;
    return true;
  }
};

// Evaluates the covariant-calculus identity suite on a connection, as exact
// polynomial tables. Componentwise identities carry their curvature
// correction terms so they hold for arbitrary gamma, not only for
// frame-derived connections; the corrections vanish identically when the
// tilde curvature does. Field-sampled identities draw deterministic random
// polynomial fields from the seed. When a frame is supplied, the suite also
// checks the parallel-column identities that need genuine parallel fields.
IdentityReport run_identity_suite(const Connection& c, uint64_t seed,
                                  const Frame* frame = nullptr);

}  // namespace llg
