#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <llg/poly.hpp>
#include <llg/rng.hpp>
#include <llg/tensor.hpp>
#include <llg/tjet.hpp>

using namespace llg;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational(" 2/5 ") == Rational(2, 5));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(den(parse_rational("-6/4")) == 2);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("polynomial arithmetic basics") {
  int n = 2;
  Poly x1 = Poly::variable(n, 1);
  Poly one = Poly::constant(n, 1);
  CHECK((x1 + one) * (x1 - one) == x1 * x1 - one);

  Poly p = Poly::parse(n, "3*x1^2*x2 - 1/2");
  CHECK(p + Poly(n) == p);

  Poly q = (x1 * x1 * Poly::variable(n, 2)).scaled(Rational(1, 2));
  CHECK(q == Poly::parse(n, "1/2*x1^2*x2"));
  CHECK_THROWS(Poly::variable(n, 1) + Poly::variable(3, 1));
}

TEST_CASE("polynomial differentiation and evaluation") {
  int n = 2;
  Poly p = Poly::parse(n, "x1^2*x2");
  CHECK(p.diff(1) == Poly::parse(n, "2*x1*x2"));
  CHECK(Poly::variable(n, 1).diff(2).is_zero());
  CHECK(Poly::parse(n, "1/2*x1^2").diff(1) == Poly::variable(n, 1));

  Poly e = Poly::parse(n, "x1 + x2^2");
  CHECK(e.eval({Rational(1), Rational(2)}) == 5);
  CHECK(Poly::parse(n, "7 - x1*x2").eval({Rational(0), Rational(0)}) == 7);
  Poly h = Poly::parse(1, "1/2*x1^2");
  CHECK(h.eval({Rational(3)}) == Rational(9, 2));
}

TEST_CASE("polynomial grammar round trips") {
  int n = 3;
  for (const char* text : {"1 + 2/3*x1*x2^2", "-x3", "x1", "0", "5 - x1^4",
                           "-1/7*x2*x2", "2*x1 - 3*x2 + x3"}) {
    Poly p = Poly::parse(n, text);
    CHECK(Poly::parse(n, p.str()) == p);
  }
  CHECK(Poly::parse(n, " - x3 ") == -Poly::variable(n, 3));
  CHECK(Poly::parse(n, "2x1") == Poly::parse(n, "2*x1"));
  CHECK_THROWS_AS(Poly::parse(n, "x4"), ParseError);
  CHECK_THROWS_AS(Poly::parse(n, "1 +"), ParseError);
  CHECK_THROWS_AS(Poly::parse(n, "1/0"), ParseError);
}

TEST_CASE("polynomial ring laws on random inputs") {
  Rng rng(20240801);
  for (int t = 0; t < 30; ++t) {
    int n = rng.uniform(1, 4);
    Poly a = random_poly(rng, n, 3, 40);
    Poly b = random_poly(rng, n, 3, 40);
    Poly c = random_poly(rng, n, 2, 40);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // Leibniz rule
    for (int j = 1; j <= n; ++j)
      CHECK((a * b).diff(j) == a.diff(j) * b + a * b.diff(j));
  }
}

TEST_CASE("polynomial shift composes translations") {
  Rng rng(7);
  Poly p = random_poly(rng, 3, 3, 60);
  QVec q{Rational(1), Rational(-2), Rational(1, 2)};
  QVec mq{Rational(-1), Rational(2), Rational(-1, 2)};
  CHECK(p.shifted(q).shifted(mq) == p);
  // evaluation consistency: p(x+q) at 0 equals p at q
  CHECK(p.shifted(q).eval({Rational(0), Rational(0), Rational(0)}) == p.eval(q));
}

TEST_CASE("first-index alternation on constant tables") {
  int n = 2;
  // A = ((1,2),(3,4)) as a (1,1)-shaped lower table with value index i=0 only
  Tensor a(n, 1, 2, 1);
  a.set({0, 0, 0}, Poly::constant(n, 1));
  a.set({0, 0, 1}, Poly::constant(n, 2));
  a.set({0, 1, 0}, Poly::constant(n, 3));
  a.set({0, 1, 1}, Poly::constant(n, 4));
  Tensor out = alternate_first(a);
  CHECK(out.at({0, 0, 0}).is_zero());
  CHECK(out.at({0, 0, 1}) == Poly::constant(n, -1));
  CHECK(out.at({0, 1, 0}) == Poly::constant(n, 1));
  CHECK(out.verify_antisym());

  // antisymmetric input doubles
  Tensor b(n, 1, 2, 1);
  b.set({0, 0, 1}, Poly::constant(n, 5));
  b.set({0, 1, 0}, Poly::constant(n, -5));
  Tensor doubled = alternate_first(b);
  CHECK(doubled.at({0, 0, 1}) == Poly::constant(n, 10));
}

TEST_CASE("alternation rejects non-antisymmetric trailing blocks") {
  int n = 2;
  Tensor bad(n, 1, 3, 2);
  bad.set({0, 0, 0, 1}, Poly::constant(n, 1));
  bad.set({0, 0, 1, 0}, Poly::constant(n, 1));  // should be -1
  CHECK_THROWS(alternate_first(bad));
}

TEST_CASE("alternation of lower gamma contraction reduces to torsion terms") {
  // [G^a_{rk} xi^i_a] alternated over (r,k) equals T^a_{rk} xi^i_a, and the
  // two-slot case reduces to the six-term torsion pattern.
  Rng rng(99);
  int n = 3;
  for (int t = 0; t < 5; ++t) {
    Tensor g = random_gamma(rng, n, 1);
    Tensor T(n, 1, 2, 2);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Poly v = g.at({i, a, b}) - g.at({i, b, a});
          if (!v.is_zero()) T.set({i, a, b}, v);
        }
    // one trailing slot
    Tensor xi(n, 1, 1);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a) xi.set({i, a}, random_poly(rng, n, 1, 60));
    Tensor inner(n, 1, 2, 1);
    inner.for_each_index([&](const TIndex& id) {
      Poly acc(n);
      for (int a = 0; a < n; ++a) acc += g.at({a, id[1], id[2]}) * xi.at({id[0], a});
      if (!acc.is_zero()) inner.set(id, acc);
    });
    Tensor lhs = alternate_first_unchecked(inner);
    Tensor rhs(n, 1, 2);
    rhs.for_each_index([&](const TIndex& id) {
      Poly acc(n);
      for (int a = 0; a < n; ++a) acc += T.at({a, id[1], id[2]}) * xi.at({id[0], a});
      if (!acc.is_zero()) rhs.set(id, acc);
    });
    CHECK((lhs - rhs).is_zero());

    // two trailing slots against an antisymmetric form
    AlgebraicCochain seed = random_cochain(rng, n, 2);
    Tensor om(n, 1, 2, 2);
    for (const auto& [idx, v] : seed.components())
      om.set(TIndex(idx.begin(), idx.end()), Poly::constant(n, v));
    Tensor inner2(n, 1, 3, 2);
    inner2.for_each_index([&](const TIndex& id) {
      // id = (i, r, k, j)
      Poly acc(n);
      for (int a = 0; a < n; ++a) {
        acc += g.at({a, id[1], id[2]}) * om.at({id[0], a, id[3]});
        acc += g.at({a, id[1], id[3]}) * om.at({id[0], id[2], a});
      }
      if (!acc.is_zero()) inner2.set(id, acc);
    });
    Tensor lhs2 = alternate_first_unchecked(inner2);
    Tensor rhs2(n, 1, 3);
    rhs2.for_each_index([&](const TIndex& id) {
      int i = id[0], r = id[1], k = id[2], j = id[3];
      Poly acc(n);
      for (int a = 0; a < n; ++a) {
        acc += T.at({a, r, k}) * om.at({i, a, j});
        acc += T.at({a, j, r}) * om.at({i, a, k});
        acc += T.at({a, k, j}) * om.at({i, a, r});
      }
      if (!acc.is_zero()) rhs2.set(id, acc);
    });
    CHECK((lhs2 - rhs2).is_zero());
  }
}

TEST_CASE("alternation output is fully antisymmetric on random admissible input") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    int n = rng.uniform(2, 4);
    int k = rng.uniform(1, n - 1);
    AlgebraicCochain seed = random_cochain(rng, n, k);
    Tensor a(n, 1, k + 1, k);
    a.for_each_index([&](const TIndex& id) {
      // trailing block from the antisymmetric seed, first slot arbitrary
      std::vector<int> key(id.begin(), id.end());
      key.erase(key.begin() + 1);
      Rational v = seed.at(key) * Rational(id[1] + 1);
      if (v != 0) a.set(id, Poly::constant(n, v));
    });
    Tensor out = alternate_first(a);
    CHECK(out.verify_antisym());
  }
}

TEST_CASE("matrix jets invert exactly") {
  int n = 2;
  auto jet_of = [&](const PolyMat& a, int order) {
    std::vector<PolyMat> c(order + 1, poly_mat_zero(n));
    c[0] = poly_mat_identity(n);
    c[1] = a;
    return MatJet(std::move(c));
  };
  // nilpotent direction: g = id - tA
  PolyMat nil = poly_mat_zero(n);
  nil[0][1] = Poly::constant(n, 3);
  MatJet f = jet_of(nil, 2);
  MatJet g = tjet_invert(f);
  CHECK(g.coeff(1)[0][1] == Poly::constant(n, -3));
  CHECK(carrier_is_zero(g.coeff(2)));

  // identity inverts to itself
  MatJet idj = MatJet::constant(poly_mat_identity(n), 3);
  CHECK(tjet_invert(idj).is_zero() == false);
  CHECK(carrier_is_zero(tjet_invert(idj).coeff(1)));

  // generic A at order 2: g = id - tA + t^2 A^2
  PolyMat a = poly_mat_zero(n);
  a[0][0] = Poly::variable(n, 1);
  a[1][0] = Poly::constant(n, 2);
  a[0][1] = Poly::constant(n, -1);
  MatJet f2 = jet_of(a, 2);
  MatJet g2 = tjet_invert(f2);
  PolyMat a2 = poly_mat_mul(a, a);
  CHECK(carrier_is_zero(carrier_sub(g2.coeff(2), a2)));

  // randomized two-sided inverse property
  Rng rng(77);
  for (int t = 0; t < 8; ++t) {
    int order = rng.uniform(1, 4);
    std::vector<PolyMat> c(order + 1, poly_mat_zero(n));
    c[0] = poly_mat_identity(n);
    for (int m = 1; m <= order; ++m)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[m][i][j] = random_poly(rng, n, 1, 50);
    MatJet fj(std::move(c));
    MatJet gj = tjet_invert(fj);
    MatJet left = fj * gj, right = gj * fj;
    for (int m = 0; m <= order; ++m) {
      PolyMat want = m == 0 ? poly_mat_identity(n) : poly_mat_zero(n);
      CHECK(carrier_is_zero(carrier_sub(left.coeff(m), want)));
      CHECK(carrier_is_zero(carrier_sub(right.coeff(m), want)));
    }
  }
  // non-identity leading coefficient is rejected
  std::vector<PolyMat> bad(2, poly_mat_zero(n));
  bad[0] = poly_mat_zero(n);
  CHECK_THROWS(tjet_invert(MatJet(std::move(bad))));
}

TEST_CASE("scalar jets multiply with truncation") {
  int n = 1;
  PolyJet a(std::vector<Poly>{Poly::constant(n, 1), Poly::variable(n, 1), Poly(n)});
  PolyJet b(std::vector<Poly>{Poly::constant(n, 2), Poly(n), Poly::constant(n, 1)});
  PolyJet prod = a * b;
  CHECK(prod.coeff(0) == Poly::constant(n, 2));
  CHECK(prod.coeff(1) == Poly::variable(n, 1).scaled(2));
  CHECK(prod.coeff(2) == Poly::constant(n, 1));
  CHECK(prod.dt().coeff(0) == Poly::variable(n, 1).scaled(2));
}
