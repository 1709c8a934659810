#pragma once

#include <llg/rational.hpp>

#include <optional>
#include <vector>

namespace llg {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row major

// In-place reduced row echelon form; returns the rank and (optionally) the
// pivot column of each reduced row. Pivoting scans columns left to right, so
// results are deterministic for a fixed column order.
int rref(QMat& m, std::vector<int>* pivot_cols = nullptr);

int rank(QMat m);

// Basis of { x : m x = 0 }, deterministic (one vector per free column).
std::vector<QVec> nullspace(const QMat& m);

// Any solution of A x = b, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& A, const QVec& b);

QVec mat_apply(const QMat& A, const QVec& x);
QMat mat_mul(const QMat& A, const QMat& B);
QMat mat_identity(int n);
bool is_zero(const QVec& v);

// Tracks a subspace by an rref row basis; used to pick deterministic
// complements (cohomology representatives, independent generators).
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}
  // Reduces v against the current basis; if the residue is nonzero it is
  // inserted (normalized) and true is returned.
  bool insert(QVec v);
  // Residue of v after reduction (zero iff v lies in the span).
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const { return is_zero(reduce(v)); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& rows() const { return rows_; }

 private:
  int dim_;
  std::vector<QVec> rows_;       // rref rows, sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace llg
