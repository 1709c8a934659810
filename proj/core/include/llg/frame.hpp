#pragma once

#include <llg/linalg.hpp>
#include <llg/poly.hpp>

namespace llg {

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial frame field with exact polynomial inverse. e[i][a] is component
// i of frame field a; w is the matrix inverse, so e*w = w*e = id exactly and
// the two-point splitting is eps(x,y) = e(y) * w(x).
class Frame {
 public:
  Frame(PolyMat e, PolyMat w);
  // Computes w by adjugate; requires det(e) to be a nonzero constant.
  static Frame from_columns(PolyMat e);

  int dim() const { return n_; }
  const PolyMat& e() const { return e_; }
  const PolyMat& w() const { return w_; }

  // Column a of e as a vector field (valence (1,0) tensor).
  PolyVec column(int a) const;

  QMat eval_e(const QVec& x) const;
  QMat eval_w(const QVec& x) const;

 private:
  int n_;
  PolyMat e_, w_;
};

// eps(x,y) = e(y) * w(x) as an exact rational matrix.
QMat splitting_eval(const Frame& f, const QVec& x, const QVec& y);

}  // namespace llg
