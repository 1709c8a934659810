#pragma once

#include <llg/connection.hpp>
#include <llg/lie_algebra.hpp>

namespace llg {

// Fully antisymmetric scalar-valued cochain (no value index).
class ScalarCochain {
 public:
  ScalarCochain() : n_(0), deg_(0) {}
  ScalarCochain(int n, int degree) : n_(n), deg_(degree) {}

  int dim() const { return n_; }
  int degree() const { return deg_; }
  Rational at(const std::vector<int>& idx) const;
  void set_antisym(const std::vector<int>& idx, const Rational& v);
  bool is_zero() const { return comp_.empty(); }
  bool operator==(const ScalarCochain& o) const {
    return n_ == o.n_ && deg_ == o.deg_ && comp_ == o.comp_;
  }
  const std::map<std::vector<int>, Rational>& components() const { return comp_; }

 private:
  int n_, deg_;
  std::map<std::vector<int>, Rational> comp_;
};

// Alternated torsion power: power 1 is the torsion cochain itself; power k
// contracts the torsion against the previous power (right-nested) and
// applies the first-index alternation, giving a (k+1)-form.
AlgebraicCochain t_power(const StructureConstants& g, int power);
// Field-level variant on the torsion tensor of a connection.
Tensor t_power_field(const Tensor& torsion, int power);

// Trivial-coefficient localized differential (value-index correction dropped).
ScalarCochain scalar_differential(const StructureConstants& g, const ScalarCochain& s);

// Contraction of the value index with the last lower index.
ScalarCochain trace_map(const AlgebraicCochain& w);

struct ClosednessVerdict {
  int power = 0;
  bool field_closed = false;  // exterior covariant derivative of the power vanishes
  bool point_closed = false;  // localized differential of the power vanishes
};

// Requires a hat-flat connection; checks d of the (2k-1)-st torsion power at
// field level and of its localization at p.
ClosednessVerdict closedness(const Connection& c, const QVec& p, int k);

struct ExactnessResult {
  bool exact = false;
  AlgebraicCochain certificate;  // with differential equal to the input (when exact)
};

// Decides whether a closed cochain is a coboundary, with certificate.
ExactnessResult class_is_exact(const StructureConstants& g, const AlgebraicCochain& w);

}  // namespace llg
