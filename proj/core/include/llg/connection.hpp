#pragma once

#include <llg/frame.hpp>
#include <llg/tensor.hpp>

#include <optional>
#include <stdexcept>

namespace llg {

class StructureConstants;  // lie_algebra.hpp

struct NotLocalLieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connection component table. gamma(i,k,j) holds the component with value
// index i, differentiation index k in the first lower slot and j in the
// second, matching the two covariant derivatives below.
class Connection {
 public:
  Connection() = default;
  // Raw component input; accepted as a parallelism candidate.
  static Connection raw(Tensor gamma);
  // Derived from a frame: gamma(i,k,j) = sum_a d_k e[i][a] * w[a][j]; every
  // frame column is then parallel for the first covariant derivative.
  static Connection from_frame(const Frame& f);

  int dim() const { return n_; }
  const Tensor& gamma() const { return gamma_; }
  bool frame_derived() const { return frame_derived_; }

 private:
  int n_ = 0;
  Tensor gamma_;  // valence (1,2)
  bool frame_derived_ = false;
};

// T(i,j,k) = gamma(i,j,k) - gamma(i,k,j); antisymmetric in the lower pair.
Tensor torsion(const Connection& c);

// Integrability-condition curvatures, stored as (1,3) tables keyed
// (i, r, j, k) and antisymmetric in (r, j).
Tensor curvature_tilde(const Connection& c);
Tensor curvature_hat(const Connection& c);

// Covariant derivative with the differentiation index in the first lower
// slot of gamma; output gains one lower slot, the first. Sign convention:
// minus the gamma correction on upper indices, plus on lower indices.
Tensor nabla_tilde(const Connection& c, const Tensor& xi);
// Same with the two lower slots of gamma swapped.
Tensor nabla_hat(const Connection& c, const Tensor& xi);

// Directional derivative (contract the new first lower slot with X).
Tensor contract_direction(const Tensor& nabla_xi, const PolyVec& x);

// Vector-field helpers (valence (1,0) tensors).
Tensor vector_field(int n, const PolyVec& comps);
PolyVec vector_components(const Tensor& v);
Tensor lie_bracket_fields(const Tensor& x, const Tensor& y);
Tensor algebraic_bracket(const Tensor& torsion, const Tensor& x, const Tensor& y);

// J(i,r,j,k): the degree-3 form of nested torsion brackets whose vanishing
// is the Jacobi identity; fully antisymmetric in the lower indices.
Tensor jacobi_form(const Tensor& torsion);

// Value-index exterior covariant derivative on (1,k) forms with full lower
// antisymmetry: partial derivative minus gamma(i,a,r) correction, then the
// first-index alternation. Degree 0 coincides with nabla_hat on vectors.
Tensor d_hat(const Connection& c, const Tensor& omega);

// Full first covariant derivative followed by the first-index alternation.
Tensor box_nabla(const Connection& c, const Tensor& omega);

struct LocalLieVerdict {
  bool tilde_flat = false;
  bool hat_flat = false;
  bool nabla_torsion_zero = false;
  bool is_local_lie_group() const { return hat_flat; }
};
LocalLieVerdict is_local_lie_group(const Connection& c);

// Truncated Taylor expansion at p of the parallel extension of a constant
// tensor: the covariant derivative of the result vanishes through total
// degree order-1 at p. Requires the tilde curvature to vanish.
Tensor invariant_jet(const Connection& c, const Tensor& value_at_p,
                     const QVec& p, int order);

// Exact parallel extension through a frame: upper slots transported by
// e(x)w(p), lower slots by e(p)w(x).
Tensor invariant_extension(const Frame& f, const Tensor& value_at_p, const QVec& p);

// Structure constants of the tangent-space bracket at p: c(i,j,k) = T(i,j,k)(p),
// with the Jacobi verdict attached.
StructureConstants localize(const Tensor& torsion, const QVec& p);

}  // namespace llg
