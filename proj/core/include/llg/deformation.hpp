#pragma once

#include <llg/connection.hpp>
#include <llg/lie_algebra.hpp>
#include <llg/rng.hpp>
#include <llg/tjet.hpp>

#include <string>

namespace llg {

// Jet of gauge transformations f(t,x) starting at the identity, with the
// truncated-series inverse computed and verified at construction.
class GaugeJet {
 public:
  explicit GaugeJet(MatJet f);
  static GaugeJet identity(int n, int order);
  // f = id + t*A (higher coefficients zero).
  static GaugeJet linear(int n, int order, const PolyMat& a);
  // exp(t*A) truncated at the jet order; convenience constructor only.
  static GaugeJet exponential(int n, int order, const PolyMat& a);

  int dim() const { return n_; }
  int order() const { return f_.order(); }
  const MatJet& f() const { return f_; }
  const MatJet& g() const { return g_; }
  // Coefficient matrix of t^m in f.
  const PolyMat& coeff(int m) const { return f_.coeff(m); }

 private:
  int n_;
  MatJet f_, g_;
};

// Gauge action on the connection: (Gamma_t)(i,k,j) = d_k f . g + f Gamma g,
// order by order in t. Coefficient zero equals the input connection.
TensorJet act_on_connection(const GaugeJet& j, const Connection& c);

TensorJet torsion_jet(const TensorJet& gamma_t);
TensorJet curvature_hat_jet(const TensorJet& gamma_t);
TensorJet curvature_tilde_jet(const TensorJet& gamma_t);
// Covariant derivative with a time-dependent connection, coefficientwise
// convolution in t; the derivative slot is the first lower index.
TensorJet nabla_tilde_jet(const TensorJet& gamma_t, const TensorJet& xi);

// f(t,y) * eps(x,y) * g(t,x) evaluated at rational points, per t-order.
std::vector<QMat> act_on_splitting(const GaugeJet& j, const Frame& f,
                                   const QVec& x, const QVec& y);

// The section taking one splitting to another through the base point p:
// f(x) = e0(x) w0(p) e1(p) w1(x).
PolyMat gauge_between(const Frame& f0, const Frame& f1, const QVec& p);

struct ValidityReport {
  // Largest m <= K with the hat curvature of Gamma_t zero mod t^(m+1).
  int validity_order = 0;
  bool tilde_flat_all_orders = false;
  // Per order m = 1..K: the velocity coefficient annihilates the torsion
  // (contraction F_m^i_a T^a_{kj} vanishes identically).
  std::vector<bool> velocity_annihilates_torsion;
  // Per order m = 1..K: every coefficient matrix of F_m kills the derived
  // algebra of the localized bracket (the coordinate-free reformulation).
  std::vector<bool> velocity_kills_derived;
  bool velocity_check_all() const {
    for (bool b : velocity_annihilates_torsion)
      if (!b) return false;
    return true;
  }
};

// Requires a hat-flat base connection.
ValidityReport validity(const GaugeJet& j, const Connection& c, const QVec& p);

// Constancy defect: Delta(i,j,k) = f^i_a T0^a_{jk} - Tt^i_{ab} f^a_j f^b_k
// per order; coefficient zero always vanishes.
TensorJet constancy_defect(const GaugeJet& j, const Connection& c);
// Largest m <= K with defect zero mod t^(m+1).
int constancy_order(const TensorJet& delta);

struct KappaReport {
  // Bracket difference at fixed components: torsion_t - torsion_0.
  TensorJet literal;
  // Pullback bracket difference: -(g . Delta); vanishing is exactly the
  // constancy condition.
  TensorJet conjugated;
  // Per order 0..K-1: coefficient of the derivative of the conjugated
  // variant is parallel for the deformed connection / the base connection.
  std::vector<bool> derivative_parallel_t;
  std::vector<bool> derivative_parallel_0;
};

KappaReport kappa(const GaugeJet& j, const Connection& c);

struct Prop17Report {
  bool constant = false;             // defect vanishes through the jet order
  bool kappa_zero = false;           // conjugated kappa vanishes
  bool kappa_zero_at_p = false;      // conjugated kappa vanishes at p
  bool derivative_zero = false;      // d/dt of conjugated kappa vanishes
  bool derivative_zero_at_p = false; // ... at p
  int first_failure_order = -1;          // of the kappa-level verdicts
  int derivative_first_failure = -1;     // of the derivative verdicts
  bool agree() const {
    return constant == kappa_zero && kappa_zero == kappa_zero_at_p &&
           kappa_zero == derivative_zero && derivative_zero == derivative_zero_at_p;
  }
};

Prop17Report prop17_report(const GaugeJet& j, const Connection& c, const QVec& p);

struct RigidityReport {
  bool derived_is_whole = false;
  // First order whose velocity coefficient fails to kill the derived
  // algebra, or -1 when every order passes.
  int first_violating_order = -1;
  bool rejected() const { return derived_is_whole && first_violating_order >= 0; }
};

RigidityReport semisimple_rigidity(const GaugeJet& j, const StructureConstants& g);

struct KsCocycle {
  PolyMat mu;          // velocity at t=0
  bool is_cocycle = false;    // exterior covariant derivative of mu vanishes
  bool is_invariant = false;  // covariant derivative of mu vanishes
  Tensor dhat_mu;
  Tensor nabla_mu;
};

// Requires constancy through order 1.
KsCocycle ks_cocycle(const GaugeJet& j, const Connection& c);

struct KsClass {
  bool defined = false;        // input was a cocycle
  bool invariant = false;      // class read in the invariant complex
  QVec coordinates;            // over the stored degree-1 representatives
  bool zero_class = false;
  AlgebraicCochain certificate;  // preimage when the class vanishes
};

KsClass ks_class(const PolyMat& mu, const StructureConstants& g, const QVec& p,
                 const Connection& c);

struct DiagramCheck {
  int degree = 0;
  bool commutes = false;
};

// Pushforward-compatibility of the exterior covariant derivatives along the
// gauge jet, on invariant forms built from the frame; expected to commute
// mod t^(K+1) exactly when the jet is a constant deformation.
std::vector<DiagramCheck> diagram_checks(const GaugeJet& j, const Frame& f,
                                         uint64_t seed, int max_degree = 2);

// Named closed-form jet families used by the property suites. `constant`
// requests a family member that is a constant deformation.
GaugeJet family_jet(Rng& rng, const std::string& algebra, int n, int order,
                    bool constant);
// Unconstrained random polynomial jet (usually not a deformation).
GaugeJet random_jet(Rng& rng, int n, int order, int max_degree);

}  // namespace llg
