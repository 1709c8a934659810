#include <llg/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace llg {

int rref(QMat& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Rational pv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

int rank(QMat m) { return rref(m); }

std::vector<QVec> nullspace(const QMat& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  QMat a = m;
  std::vector<int> piv;
  int r = rref(a, &piv);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec v(cols, Rational(0));
    v[fc] = 1;
    for (int i = 0; i < r; ++i) v[piv[i]] = -a[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& A, const QVec& b) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  QMat aug(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    std::copy(A[i].begin(), A[i].end(), aug[i].begin());
    aug[i][cols] = b[i];
  }
  std::vector<int> piv;
  int r = rref(aug, &piv);
  for (int i = 0; i < r; ++i) {
    if (piv[i] == cols) return std::nullopt;  // pivot in the augmented column
  }
  QVec x(cols, Rational(0));
  for (int i = 0; i < r; ++i) x[piv[i]] = aug[i][cols];
  return x;
}

QVec mat_apply(const QMat& A, const QVec& x) {
  QVec y(A.size(), Rational(0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
  return y;
}

QMat mat_mul(const QMat& A, const QMat& B) {
  size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
  QMat C(n, QVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

QMat mat_identity(int n) {
  QMat m(n, QVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVec RowSpace::reduce(QVec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (v[p] != 0) {
      Rational f = v[p];
      for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool RowSpace::insert(QVec v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  Rational pv = v[p];
  for (int j = 0; j < dim_; ++j) v[j] /= pv;
  // back-substitute into existing rows, keep rows sorted by pivot
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][p] != 0) {
      Rational f = rows_[i][p];
      for (int j = 0; j < dim_; ++j) rows_[i][j] -= f * v[j];
    }
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

}  // namespace llg
