#pragma once

#include <llg/linalg.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace llg {

struct JacobiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure constants c(i,j,k) of a bracket [e_j, e_k] = c^i_{jk} e_i,
// antisymmetric in (j,k); the Jacobi verdict is computed at construction.
class StructureConstants {
 public:
  StructureConstants() : n_(0), jacobi_(true) {}
  // Full table input; antisymmetry is verified.
  StructureConstants(int n, std::map<std::array<int, 3>, Rational> c);
  // Sparse (i, j, k, value) entries with j < k; antisymmetric completion.
  static StructureConstants from_sparse(
      int n, const std::vector<std::tuple<int, int, int, Rational>>& entries);

  int dim() const { return n_; }
  bool jacobi_ok() const { return jacobi_; }
  Rational at(int i, int j, int k) const;
  // All nonzero entries with j < k.
  std::vector<std::tuple<int, int, int, Rational>> sparse() const;

  QVec bracket(const QVec& x, const QVec& y) const;
  // First violating triple when Jacobi fails (for diagnostics).
  std::optional<std::array<int, 3>> jacobi_witness() const;

 private:
  int n_;
  std::map<std::array<int, 3>, Rational> c_;
  bool jacobi_;
};

// Element of Lambda^k(T_p^*) (x) T_p: value index plus k fully antisymmetric
// lower indices, stored as a complete zero-suppressed table.
class AlgebraicCochain {
 public:
  AlgebraicCochain() : n_(0), deg_(0) {}
  AlgebraicCochain(int n, int degree);

  int dim() const { return n_; }
  int degree() const { return deg_; }

  Rational at(const std::vector<int>& idx) const;  // (i, j1..jk)
  void add(const std::vector<int>& idx, const Rational& v);
  // Sets the component and all permutations of the lower block with signs.
  void set_antisym(const std::vector<int>& idx, const Rational& v);

  bool is_zero() const;
  AlgebraicCochain operator+(const AlgebraicCochain& o) const;
  AlgebraicCochain operator-(const AlgebraicCochain& o) const;
  AlgebraicCochain scaled(const Rational& c) const;
  bool operator==(const AlgebraicCochain& o) const;
  bool verify_antisym() const;

  // Coordinates over the canonical basis (i, j1<...<jk), value index fastest
  // ... deterministic: enumerate i = 0..n-1 outer, combinations inner.
  static int space_dim(int n, int k);  // n * C(n,k)
  QVec coordinates() const;
  static AlgebraicCochain from_coordinates(int n, int k, const QVec& coords);

  const std::map<std::vector<int>, Rational>& components() const { return comp_; }

 private:
  int n_, deg_;
  std::map<std::vector<int>, Rational> comp_;
};

// Differential of the localized complex: first-index alternation of
// [-c(i,a,r) w(a,...) - half-c lower corrections]; equals the localization
// of the field-level exterior covariant derivative on parallel forms.
AlgebraicCochain differential_D(const StructureConstants& g, const AlgebraicCochain& w);

// Independent textbook differential of Lie-algebra cohomology with adjoint
// coefficients, used as the cross-checking oracle.
AlgebraicCochain ce_oracle_differential(const StructureConstants& g, const AlgebraicCochain& w);

std::vector<QVec> center(const StructureConstants& g);
std::vector<QVec> derived_algebra(const StructureConstants& g);
// Derivations as n*n matrices (row-major coordinate vectors).
std::vector<QVec> derivations(const StructureConstants& g);
std::vector<QVec> inner_derivations(const StructureConstants& g);

// Matrix of differential_D from degree k to k+1 over the canonical bases.
QMat differential_matrix(const StructureConstants& g, int k);
QMat ce_oracle_matrix(const StructureConstants& g, int k);

struct DegreeReport {
  int degree = 0;
  int space_dim = 0;
  int rank = 0;        // rank of D_k
  int kernel_dim = 0;  // dim ker D_k
  int h_dim = 0;       // kernel_dim - rank D_{k-1}
  std::vector<AlgebraicCochain> representatives;
};

struct CohomologyReport {
  int n = 0;
  int max_degree = 0;
  std::vector<DegreeReport> by_degree;
  int euler_characteristic() const;
};

// Exact-rank cohomology of the localized complex, with deterministic
// reduced-echelon representatives of ker D_k modulo im D_{k-1}.
CohomologyReport cohomology(const StructureConstants& g, int max_degree);

}  // namespace llg
