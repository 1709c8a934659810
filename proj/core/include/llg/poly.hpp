#pragma once

#include <llg/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace llg {

// Exponent multi-index in coordinates x1..xn.
struct Monomial {
  std::vector<unsigned> exp;

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exp) d += e;
    return d;
  }
  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Graded lexicographic: lower total degree first, then lex on exponents.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
  }
};

// Multivariate polynomial over exact rationals, canonical by construction:
// no zero coefficients, no duplicate monomials, graded-lex term order.
class Poly {
 public:
  Poly() : n_(0) {}
  explicit Poly(int n) : n_(n) {}

  static Poly constant(int n, const Rational& c);
  static Poly variable(int n, int j);  // x_j, 1-based

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  const std::map<Monomial, Rational, GradedLex>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Poly diff(int j) const;  // d/dx_j, 1-based
  Rational eval(const std::vector<Rational>& point) const;
  // p(x + q) as a polynomial in x.
  Poly shifted(const std::vector<Rational>& q) const;
  // Homogeneous part of the given total degree.
  Poly homogeneous_part(unsigned degree) const;

  // Grammar: poly := term (('+'|'-') term)* ;
  //          term := coeff ('*' var ('^' uint)?)* | var ('^' uint)? ('*' var ...)*
  //          coeff := int | int '/' uint ; var := 'x' uint. Whitespace ignored.
  static Poly parse(int n, std::string_view text);
  std::string str() const;

 private:
  void check_dim(const Poly& o) const;
  int n_;
  std::map<Monomial, Rational, GradedLex> terms_;
};

using PolyMat = std::vector<std::vector<Poly>>;
using PolyVec = std::vector<Poly>;

PolyMat poly_mat_identity(int n);
PolyMat poly_mat_zero(int n);
PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b);
PolyMat poly_mat_add(const PolyMat& a, const PolyMat& b);
bool poly_mat_is_identity(const PolyMat& m);
Poly poly_mat_det(const PolyMat& m);
// Adjugate divided by a constant determinant; throws if det is not a nonzero constant.
PolyMat poly_mat_inverse_const_det(const PolyMat& m);

}  // namespace llg
