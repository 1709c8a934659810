#pragma once

#include <llg/frame.hpp>
#include <llg/lie_algebra.hpp>
#include <llg/poly.hpp>
#include <llg/tensor.hpp>

#include <cstdint>

namespace llg {

// Deterministic generator (splitmix64) so seeded reports are byte-identical
// across platforms; no standard-library distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  Rng fork();  // independent child stream

 private:
  uint64_t state_;
};

Poly random_poly(Rng& rng, int n, int max_degree, int percent_density = 50);
// Unit lower-triangular polynomial frame (determinant one) with exact inverse.
Frame random_unimodular_frame(Rng& rng, int n, int max_degree);
// Arbitrary sparse polynomial connection table (parallelism candidate).
Tensor random_gamma(Rng& rng, int n, int max_degree);
// Random vector field with small integer coefficients.
PolyVec random_vector_field(Rng& rng, int n, int max_degree);
// Jacobi-satisfying constants: a seed algebra conjugated by a random
// unimodular change of basis.
StructureConstants random_jacobi_constants(Rng& rng, int n);
// Random cochain with entries in [-3, 3].
AlgebraicCochain random_cochain(Rng& rng, int n, int degree);

}  // namespace llg
