#pragma once

#include <llg/poly.hpp>
#include <llg/tensor.hpp>

#include <stdexcept>
#include <vector>

namespace llg {

inline Poly carrier_zero_like(const Poly& x) { return Poly(x.dim()); }
inline Poly carrier_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly carrier_sub(const Poly& a, const Poly& b) { return a - b; }
inline Poly carrier_mul(const Poly& a, const Poly& b) { return a * b; }
inline bool carrier_is_zero(const Poly& a) { return a.is_zero(); }

inline PolyMat carrier_zero_like(const PolyMat& x) {
  return PolyMat(x.size(), PolyVec(x.size(), Poly(x[0][0].dim())));
}
inline PolyMat carrier_add(const PolyMat& a, const PolyMat& b) { return poly_mat_add(a, b); }
inline PolyMat carrier_sub(const PolyMat& a, const PolyMat& b) {
  PolyMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) r[i][j] -= b[i][j];
  return r;
}
inline PolyMat carrier_mul(const PolyMat& a, const PolyMat& b) { return poly_mat_mul(a, b); }
inline bool carrier_is_zero(const PolyMat& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

inline Tensor carrier_zero_like(const Tensor& x) {
  return Tensor(x.dim(), x.upper(), x.lower(), x.antisym_tail());
}
inline Tensor carrier_add(const Tensor& a, const Tensor& b) { return a + b; }
inline Tensor carrier_sub(const Tensor& a, const Tensor& b) { return a - b; }
inline bool carrier_is_zero(const Tensor& a) { return a.is_zero(); }

// Truncated power series in the deformation time t. Arithmetic truncates at
// t^(K+1); exactly K+1 coefficients are stored, coefficient m multiplying t^m.
template <class T>
class TJet {
 public:
  TJet() = default;
  explicit TJet(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("jet needs at least the t^0 coefficient");
  }
  static TJet constant(const T& value, int order) {
    std::vector<T> c(order + 1, carrier_zero_like(value));
    c[0] = value;
    return TJet(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& coeff(int m) const { return c_.at(m); }
  T& coeff(int m) { return c_.at(m); }
  const std::vector<T>& coeffs() const { return c_; }

  TJet operator+(const TJet& o) const {
    check(o);
    std::vector<T> r = c_;
    for (size_t m = 0; m < r.size(); ++m) r[m] = carrier_add(r[m], o.c_[m]);
    return TJet(std::move(r));
  }
  TJet operator-(const TJet& o) const {
    check(o);
    std::vector<T> r = c_;
    for (size_t m = 0; m < r.size(); ++m) r[m] = carrier_sub(r[m], o.c_[m]);
    return TJet(std::move(r));
  }
  TJet operator*(const TJet& o) const {
    check(o);
    std::vector<T> r(c_.size(), carrier_zero_like(c_[0]));
    for (size_t m = 0; m < r.size(); ++m)
      for (size_t q = 0; q <= m; ++q)
        r[m] = carrier_add(r[m], carrier_mul(c_[q], o.c_[m - q]));
    return TJet(std::move(r));
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!carrier_is_zero(x)) return false;
    return true;
  }
  // Smallest m with a nonzero coefficient, or -1 when the jet vanishes.
  int first_nonzero_order() const {
    for (size_t m = 0; m < c_.size(); ++m)
      if (!carrier_is_zero(c_[m])) return static_cast<int>(m);
    return -1;
  }

  // d/dt, one order shorter.
  TJet dt() const {
    if (order() == 0) return TJet(std::vector<T>{carrier_zero_like(c_[0])});
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (int m = 1; m <= order(); ++m) r.push_back(scale_int(c_[m], m));
    return TJet(std::move(r));
  }

  TJet truncated(int new_order) const {
    std::vector<T> r(c_.begin(), c_.begin() + new_order + 1);
    return TJet(std::move(r));
  }

 private:
  static Poly scale_int(const Poly& p, int k) { return p.scaled(Rational(k)); }
  static PolyMat scale_int(const PolyMat& m, int k) {
    PolyMat r = m;
    for (auto& row : r)
      for (auto& p : row) p = p.scaled(Rational(k));
    return r;
  }
  static Tensor scale_int(const Tensor& t, int k) { return t.scaled(Rational(k)); }

  void check(const TJet& o) const {
    if (c_.size() != o.c_.size()) throw std::invalid_argument("jet order mismatch");
  }
  std::vector<T> c_;
};

using PolyJet = TJet<Poly>;
using MatJet = TJet<PolyMat>;
using TensorJet = TJet<Tensor>;

// Inverse of a matrix jet whose t^0 coefficient is the identity:
// g_m = -sum_{q=1..m} f_q g_{m-q}, so f*g = g*f = id mod t^(K+1) exactly.
inline MatJet tjet_invert(const MatJet& f) {
  if (!poly_mat_is_identity(f.coeff(0)))
    throw std::invalid_argument("jet inversion requires the identity as t^0 coefficient");
  int K = f.order();
  int n = static_cast<int>(f.coeff(0).size());
  std::vector<PolyMat> g(K + 1, poly_mat_zero(n));
  g[0] = poly_mat_identity(n);
  for (int m = 1; m <= K; ++m) {
    PolyMat acc = poly_mat_zero(n);
    for (int q = 1; q <= m; ++q) acc = poly_mat_add(acc, poly_mat_mul(f.coeff(q), g[m - q]));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[m][i][j] = -acc[i][j];
  }
  return MatJet(std::move(g));
}

}  // namespace llg
