#include <llg/poly.hpp>

#include <cctype>
#include <sstream>

namespace llg {

Rational parse_rational(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (a == b) throw ParseError("empty rational literal");
  std::string body(s.substr(a, b - a));
  try {
    return Rational(body);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: '" + body + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  if (c != 0) p.terms_[Monomial{std::vector<unsigned>(n, 0)}] = c;
  return p;
}

Poly Poly::variable(int n, int j) {
  if (j < 1 || j > n) throw std::out_of_range("variable index out of range");
  Poly p(n);
  Monomial m{std::vector<unsigned>(n, 0)};
  m.exp[j - 1] = 1;
  p.terms_[m] = 1;
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_dim(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomial chart dimension mismatch");
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_dim(o);
  Poly r(n_);
  Monomial m{std::vector<unsigned>(n_)};
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      for (int i = 0; i < n_; ++i) m.exp[i] = m1.exp[i] + m2.exp[i];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        Rational prod = c1 * c2;
        if (prod != 0) r.terms_.emplace(m, std::move(prod));
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(n_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly Poly::diff(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("derivative index out of range");
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[j - 1] == 0) continue;
    Monomial d = m;
    d.exp[j - 1] -= 1;
    r.add_term(d, c * m.exp[j - 1]);
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < n_; ++i) {
      for (unsigned e = 0; e < m.exp[i]; ++e) v *= point[i];
    }
    s += v;
  }
  return s;
}

Poly Poly::shifted(const std::vector<Rational>& q) const {
  if (static_cast<int>(q.size()) != n_)
    throw std::invalid_argument("shift vector dimension mismatch");
  // substitute x_i -> x_i + q_i, one variable at a time
  Poly result = *this;
  for (int i = 0; i < n_; ++i) {
    if (q[i] == 0) continue;
    Poly next(n_);
    for (const auto& [m, c] : result.terms_) {
      unsigned e = m.exp[i];
      // (x_i + q_i)^e expanded with binomials
      Rational binom = 1;
      Rational qpow = 1;
      for (unsigned k = 0; k <= e; ++k) {
        Monomial mm = m;
        mm.exp[i] = e - k;
        next.add_term(mm, c * binom * qpow);
        binom = binom * (e - k) / (k + 1);
        qpow *= q[i];
      }
    }
    result = next;
  }
  return result;
}

Poly Poly::homogeneous_part(unsigned degree) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_[m] = c;
  return r;
}

namespace {

struct Lexer {
  std::string_view s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return s[i];
  }
  char get() {
    skip();
    return s[i++];
  }
  Int integer() {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer in polynomial");
    return Int(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

Poly Poly::parse(int n, std::string_view text) {
  Lexer lx{text};
  Poly out(n);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (!first || lx.peek() == '+' || lx.peek() == '-') {
      char c = lx.get();
      if (c == '-')
        sign = -1;
      else if (c != '+')
        throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    if (lx.eof()) throw ParseError("dangling sign in polynomial");

    Rational coeff = sign;
    Monomial m{std::vector<unsigned>(n, 0)};
    bool saw_factor = false;

    // optional leading coefficient
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Int numerator = lx.integer();
      Rational c(numerator);
      if (!lx.eof() && lx.peek() == '/') {
        lx.get();
        Int d = lx.integer();
        if (d <= 0) throw ParseError("denominator must be positive");
        c = Rational(numerator, d);
      }
      coeff *= c;
      saw_factor = true;
      if (!lx.eof() && lx.peek() == '*') lx.get();
    }
    // variable factors
    while (!lx.eof() && (lx.peek() == 'x' || lx.peek() == 'X')) {
      lx.get();
      Int vj = lx.integer();
      if (vj < 1 || vj > n) throw ParseError("variable index out of range in polynomial");
      unsigned e = 1;
      if (!lx.eof() && lx.peek() == '^') {
        lx.get();
        Int ee = lx.integer();
        if (ee < 0) throw ParseError("negative exponent");
        e = static_cast<unsigned>(ee);
      }
      m.exp[static_cast<int>(vj) - 1] += e;
      saw_factor = true;
      if (!lx.eof() && lx.peek() == '*') lx.get();
    }
    if (!saw_factor) throw ParseError("expected term in polynomial");
    out.add_term(m, coeff);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = m.degree() > 0;
    if (!has_vars || a != 1) {
      os << to_string(a);
      if (has_vars) os << "*";
    }
    bool v_first = true;
    for (size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (!v_first) os << "*";
      v_first = false;
      os << "x" << (i + 1);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
    }
  }
  return os.str();
}

PolyMat poly_mat_identity(int n) {
  PolyMat m(n, PolyVec(n, Poly(n)));
  for (int i = 0; i < n; ++i) m[i][i] = Poly::constant(n, 1);
  return m;
}

PolyMat poly_mat_zero(int n) { return PolyMat(n, PolyVec(n, Poly(n))); }

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  int n = static_cast<int>(a.size());
  PolyMat r = poly_mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

PolyMat poly_mat_add(const PolyMat& a, const PolyMat& b) {
  int n = static_cast<int>(a.size());
  PolyMat r = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] += b[i][j];
  return r;
}

bool poly_mat_is_identity(const PolyMat& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly want = i == j ? Poly::constant(n, 1) : Poly(n);
      if (!(m[i][j] == want)) return false;
    }
  return true;
}

Poly poly_mat_det(const PolyMat& m) {
  int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  Poly det(m[0][0].dim());
  for (int j = 0; j < n; ++j) {
    PolyMat minor;
    for (int r = 1; r < n; ++r) {
      PolyVec row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    Poly term = m[0][j] * poly_mat_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

PolyMat poly_mat_inverse_const_det(const PolyMat& m) {
  int n = static_cast<int>(m.size());
  int dim = m[0][0].dim();
  Poly det = poly_mat_det(m);
  if (det.is_zero() || det.degree() > 0)
    throw std::invalid_argument(
        "frame inverse requires a nonzero constant determinant; supply the inverse explicitly");
  Rational d = det.terms().begin()->second;
  PolyMat inv = poly_mat_zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyMat minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        PolyVec row;
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      Poly cof = n == 1 ? Poly::constant(dim, 1) : poly_mat_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof.scaled(Rational(1) / d);
    }
  }
  return inv;
}

}  // namespace llg
