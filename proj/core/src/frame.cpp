#include <llg/frame.hpp>

namespace llg {

namespace {

void require_square(const PolyMat& m, const char* what) {
  if (m.empty()) throw InvariantError(std::string(what) + ": empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size())
      throw InvariantError(std::string(what) + ": matrix is not square");
}

}  // namespace

Frame::Frame(PolyMat e, PolyMat w) : n_(static_cast<int>(e.size())), e_(std::move(e)), w_(std::move(w)) {
  require_square(e_, "frame");
  require_square(w_, "frame inverse");
  if (w_.size() != e_.size()) throw InvariantError("frame and inverse dimension mismatch");
  if (n_ < 2) throw InvariantError("chart dimension must be at least 2");
  if (!poly_mat_is_identity(poly_mat_mul(e_, w_)) ||
      !poly_mat_is_identity(poly_mat_mul(w_, e_)))
    throw InvariantError("frame inverse check failed: e*w and w*e must both be the identity");
}

Frame Frame::from_columns(PolyMat e) {
  require_square(e, "frame");
  PolyMat w = poly_mat_inverse_const_det(e);
  return Frame(std::move(e), std::move(w));
}

PolyVec Frame::column(int a) const {
  PolyVec v;
  v.reserve(n_);
  for (int i = 0; i < n_; ++i) v.push_back(e_[i][a]);
  return v;
}

QMat Frame::eval_e(const QVec& x) const {
  QMat m(n_, QVec(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = e_[i][j].eval(x);
  return m;
}

QMat Frame::eval_w(const QVec& x) const {
  QMat m(n_, QVec(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = w_[i][j].eval(x);
  return m;
}

QMat splitting_eval(const Frame& f, const QVec& x, const QVec& y) {
  if (static_cast<int>(x.size()) != f.dim() || static_cast<int>(y.size()) != f.dim())
    throw std::invalid_argument("splitting evaluation point dimension mismatch");
  return mat_mul(f.eval_e(y), f.eval_w(x));
}

}  // namespace llg
