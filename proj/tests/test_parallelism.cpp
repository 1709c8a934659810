#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <llg/connection.hpp>
#include <llg/examples.hpp>
#include <llg/lie_algebra.hpp>
#include <llg/rng.hpp>

using namespace llg;

namespace {

// Independent route to the connection components, straight from the raw
// polynomial matrices (test-side oracle for the frozen values below).
Tensor gamma_by_hand(const Frame& f) {
  int n = f.dim();
  Tensor g(n, 1, 2);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Poly acc(n);
        for (int a = 0; a < n; ++a) acc += f.e()[i][a].diff(k + 1) * f.w()[a][j];
        if (!acc.is_zero()) g.set({i, k, j}, acc);
      }
  return g;
}

}  // namespace

TEST_CASE("frame construction checks the exact inverse") {
  CHECK_NOTHROW(heisenberg_frame());
  PolyMat e = poly_mat_identity(2);
  PolyMat w = poly_mat_identity(2);
  w[0][0] = Poly::constant(2, 2);
  CHECK_THROWS_AS(Frame(e, w), InvariantError);
  // adjugate path for constant-determinant frames
  PolyMat e2 = poly_mat_identity(3);
  e2[2][1] = Poly::variable(3, 1);
  Frame f = Frame::from_columns(e2);
  CHECK(poly_mat_is_identity(poly_mat_mul(f.e(), f.w())));
  // non-constant determinant is refused
  PolyMat e3 = poly_mat_identity(2);
  e3[0][0] = Poly::parse(2, "1 + x1");
  CHECK_THROWS(Frame::from_columns(e3));
}

TEST_CASE("connection from frame: frozen example tables") {
  {
    Connection c = Connection::from_frame(abelian_frame(2));
    CHECK(c.gamma().is_zero());
  }
  {
    Frame f = heisenberg_frame();
    Connection c = Connection::from_frame(f);
    CHECK(c.gamma() == gamma_by_hand(f));
    CHECK(c.gamma().at({2, 0, 1}) == Poly::constant(3, 1));
    CHECK(c.gamma().components().size() == 1);
  }
  {
    Frame f = engel_frame();
    Connection c = Connection::from_frame(f);
    CHECK(c.gamma() == gamma_by_hand(f));
    // exactly two nonzero components; the (4,1,2) entry cancels exactly
    CHECK(c.gamma().at({2, 0, 1}) == Poly::constant(4, 1));
    CHECK(c.gamma().at({3, 0, 2}) == Poly::constant(4, 1));
    CHECK(c.gamma().at({3, 0, 1}).is_zero());
    CHECK(c.gamma().components().size() == 2);
  }
}

TEST_CASE("frame columns solve the parallel-transport equation") {
  for (const Frame& f : {heisenberg_frame(), engel_frame(), nonflat_frame()}) {
    Connection c = Connection::from_frame(f);
    for (int a = 0; a < f.dim(); ++a) {
      Tensor col = vector_field(f.dim(), f.column(a));
      CHECK(nabla_tilde(c, col).is_zero());
    }
    CHECK(curvature_tilde(c).is_zero());
  }
}

TEST_CASE("splitting evaluation satisfies the groupoid laws") {
  Frame f = heisenberg_frame();
  QVec p{Rational(1), Rational(-2), Rational(1, 3)};
  QMat idm = splitting_eval(f, p, p);
  CHECK(idm == mat_identity(3));

  QVec o{Rational(0), Rational(0), Rational(0)};
  QVec y{Rational(1), Rational(0), Rational(0)};
  CHECK(splitting_eval(f, o, y) == f.eval_e(y));

  Rng rng(3);
  for (int t = 0; t < 3; ++t) {
    QVec x(3), z(3), w(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
      z[i] = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
      w[i] = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
    }
    QMat lhs = mat_mul(splitting_eval(f, z, w), splitting_eval(f, x, z));
    CHECK(lhs == splitting_eval(f, x, w));
  }
}

TEST_CASE("covariant derivatives on the frozen examples") {
  Connection flat = Connection::from_frame(abelian_frame(2));
  Tensor v = vector_field(2, {Poly::parse(2, "x1*x2"), Poly::parse(2, "x2^2")});
  Tensor nv = nabla_tilde(flat, v);
  CHECK(nv.at({0, 0}) == Poly::variable(2, 2));
  CHECK(nabla_hat(flat, v) == nv);

  Connection c = Connection::from_frame(heisenberg_frame());
  Tensor e2 = vector_field(3, heisenberg_frame().column(1));
  CHECK(nabla_tilde(c, e2).is_zero());

  Tensor constant_e2 = vector_field(
      3, {Poly(3), Poly::constant(3, 1), Poly(3)});
  Tensor nt = nabla_tilde(c, constant_e2);
  CHECK(nt.at({2, 0}) == Poly::constant(3, -1));
  CHECK(nt.components().size() == 1);

  Tensor e1c = vector_field(3, {Poly::constant(3, 1), Poly(3), Poly(3)});
  Tensor nh = nabla_hat(c, e1c);
  CHECK(nh.at({2, 1}) == Poly::constant(3, -1));
  CHECK(nh.components().size() == 1);

  // difference of the two derivatives is a torsion contraction
  Rng rng(17);
  Tensor xi = vector_field(3, random_vector_field(rng, 3, 2));
  Tensor diff = nabla_tilde(c, xi) - nabla_hat(c, xi);
  Tensor T = torsion(c);
  Tensor want(3, 1, 1);
  want.for_each_index([&](const TIndex& id) {
    Poly acc(3);
    for (int a = 0; a < 3; ++a) acc += T.at({id[0], a, id[1]}) * xi.at({a});
    if (!acc.is_zero()) want.set(id, acc);
  });
  CHECK((diff - want).is_zero());
}

TEST_CASE("torsion, algebraic bracket and the cubic form") {
  Connection ab = Connection::from_frame(abelian_frame(3));
  CHECK(torsion(ab).is_zero());
  CHECK(jacobi_form(torsion(ab)).is_zero());

  Connection c = Connection::from_frame(heisenberg_frame());
  Tensor T = torsion(c);
  CHECK(T.at({2, 0, 1}) == Poly::constant(3, 1));
  CHECK(T.at({2, 1, 0}) == Poly::constant(3, -1));
  CHECK(T.components().size() == 2);
  CHECK(T.verify_antisym());
  CHECK(jacobi_form(T).is_zero());

  // single-generator constant torsion
  Tensor taff(2, 1, 2, 2);
  taff.set({1, 0, 1}, Poly::constant(2, 1));
  taff.set({1, 1, 0}, Poly::constant(2, -1));
  CHECK(jacobi_form(taff).is_zero());

  // bracket contraction
  Tensor X = vector_field(3, {Poly::constant(3, 1), Poly(3), Poly(3)});
  Tensor Y = vector_field(3, {Poly(3), Poly::constant(3, 1), Poly(3)});
  Tensor br = algebraic_bracket(T, X, Y);
  CHECK(br.at({2}) == Poly::constant(3, 1));
  CHECK(br.components().size() == 1);
}

TEST_CASE("curvature tables on raw one-component connections") {
  int n = 3;
  {
    // the derivative sits in the antisymmetrized pair: hat curvature survives
    Tensor g(n, 1, 2);
    g.set({2, 1, 0}, Poly::variable(n, 2));
    Connection c = Connection::raw(g);
    Tensor rh = curvature_hat(c);
    CHECK(rh.at({2, 1, 0, 1}) == Poly::constant(n, 1));
    CHECK(rh.at({2, 0, 1, 1}) == Poly::constant(n, -1));
    CHECK(rh.components().size() == 2);
  }
  {
    // with the lower pair transposed the hat table is flat and the tilde
    // curvature picks the derivative up instead
    Tensor g(n, 1, 2);
    g.set({2, 0, 1}, Poly::variable(n, 2));
    Connection c = Connection::raw(g);
    CHECK(curvature_hat(c).is_zero());
    Tensor rt = curvature_tilde(c);
    CHECK(rt.at({2, 1, 0, 1}) == Poly::constant(n, 1));
  }
}

TEST_CASE("flatness verdicts") {
  auto v1 = is_local_lie_group(Connection::from_frame(heisenberg_frame()));
  CHECK(v1.tilde_flat);
  CHECK(v1.hat_flat);
  CHECK(v1.nabla_torsion_zero);

  auto v2 = is_local_lie_group(Connection::from_frame(abelian_frame(2)));
  CHECK((v2.tilde_flat && v2.hat_flat && v2.nabla_torsion_zero));

  auto v3 = is_local_lie_group(Connection::from_frame(engel_frame()));
  CHECK((v3.tilde_flat && v3.hat_flat && v3.nabla_torsion_zero));

  // quadratic shear: not a local Lie group, and the two detectors agree
  Connection bad = Connection::from_frame(nonflat_frame());
  auto v4 = is_local_lie_group(bad);
  CHECK(v4.tilde_flat);
  CHECK(!v4.hat_flat);
  CHECK(!v4.nabla_torsion_zero);
  CHECK(curvature_hat(bad).at({2, 0, 1, 0}) == Poly::constant(3, 1));

  // a linear shear in its own coordinate is flat: an abelian group in
  // disguise (torsion cancels in the symmetric lower pair)
  PolyMat e = poly_mat_identity(3);
  e[2][1] = Poly::variable(3, 2);
  PolyMat w = poly_mat_identity(3);
  w[2][1] = -Poly::variable(3, 2);
  Connection disguised = Connection::from_frame(Frame(e, w));
  CHECK(torsion(disguised).is_zero());
  auto v5 = is_local_lie_group(disguised);
  CHECK((v5.tilde_flat && v5.hat_flat && v5.nabla_torsion_zero));
}

TEST_CASE("exterior covariant derivative") {
  // flat case: plain alternated partial derivatives
  Connection flat = Connection::from_frame(abelian_frame(2));
  Tensor om(2, 1, 1, 1);
  om.set({0, 0}, Poly::parse(2, "x2"));
  om.set({1, 1}, Poly::parse(2, "x1*x1"));
  Tensor d = d_hat(flat, om);
  CHECK(d.at({0, 0, 1}) == Poly::constant(2, -1));
  CHECK(d.at({0, 1, 0}) == Poly::constant(2, 1));

  // degree-1 table agrees with the explicit two-term expansion
  Connection c = Connection::from_frame(heisenberg_frame());
  Rng rng(23);
  Tensor eta(3, 1, 1, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) eta.set({i, j}, random_poly(rng, 3, 2, 60));
  Tensor got = d_hat(c, eta);
  Tensor want(3, 1, 2, 2);
  want.for_each_index([&](const TIndex& id) {
    int i = id[0], k = id[1], j = id[2];
    Poly acc = eta.at({i, j}).diff(k + 1) - eta.at({i, k}).diff(j + 1);
    for (int a = 0; a < 3; ++a) {
      acc += c.gamma().at({i, a, j}) * eta.at({a, k});
      acc -= c.gamma().at({i, a, k}) * eta.at({a, j});
    }
    if (!acc.is_zero()) want.set(id, acc);
  });
  CHECK((got - want).is_zero());

  // degree zero coincides with the hat covariant derivative on vectors
  Tensor v = vector_field(3, random_vector_field(rng, 3, 2));
  CHECK((d_hat(c, v) - nabla_hat(c, v)).is_zero());

  // torsion is closed on the flat examples
  CHECK(d_hat(c, torsion(c)).is_zero());
  Connection ce = Connection::from_frame(engel_frame());
  CHECK(d_hat(ce, torsion(ce)).is_zero());

  Tensor not_a_form(3, 1, 2, 2);
  not_a_form.set({0, 0, 1}, Poly::constant(3, 1));
  not_a_form.set({0, 1, 0}, Poly::constant(3, 1));
  CHECK_THROWS(d_hat(c, not_a_form));
}

TEST_CASE("alternated covariant derivative matches its expansion") {
  Rng rng(31);
  for (int t = 0; t < 4; ++t) {
    int n = 3;
    Connection c = t % 2 == 0
                       ? Connection::from_frame(random_unimodular_frame(rng, n, 1))
                       : Connection::raw(random_gamma(rng, n, 1));
    Tensor T = torsion(c);
    for (int k = 1; k <= 2; ++k) {
      AlgebraicCochain seedc = random_cochain(rng, n, k);
      Tensor om(n, 1, k, k);
      for (const auto& [idx, v] : seedc.components())
        om.set(TIndex(idx.begin(), idx.end()), Poly::constant(n, v));
      // flat-case shortcut
      if (c.gamma().is_zero()) continue;
      Tensor tcorr(n, 1, k + 1, k), gcorr(n, 1, k + 1, k);
      tcorr.for_each_index([&](const TIndex& id) {
        Poly acc(n);
        for (int a = 0; a < n; ++a) {
          TIndex sub{a};
          sub.insert(sub.end(), id.begin() + 2, id.end());
          acc += T.at({id[0], a, id[1]}) * om.at(sub);
        }
        if (!acc.is_zero()) tcorr.set(id, acc);
      });
      gcorr.for_each_index([&](const TIndex& id) {
        Poly acc(n);
        for (int q = 0; q < k; ++q)
          for (int a = 0; a < n; ++a) {
            TIndex sub{id[0]};
            sub.insert(sub.end(), id.begin() + 2, id.end());
            sub[1 + q] = a;
            acc += c.gamma().at({a, id[1], id[2 + q]}) * om.at(sub);
          }
        if (!acc.is_zero()) gcorr.set(id, acc);
      });
      Tensor rhs = d_hat(c, om) + alternate_first_unchecked(tcorr) +
                   alternate_first_unchecked(gcorr);
      CHECK((box_nabla(c, om) - rhs).is_zero());
    }
  }
  // flat connection: the two operators coincide
  Connection flat = Connection::from_frame(abelian_frame(2));
  Tensor om(2, 1, 1, 1);
  om.set({0, 0}, Poly::parse(2, "x1*x2"));
  CHECK((box_nabla(flat, om) - d_hat(flat, om)).is_zero());
}

TEST_CASE("parallel extension jets") {
  // flat: constant extension
  Connection flat = Connection::from_frame(abelian_frame(2));
  Tensor seed(2, 1, 0);
  seed.set({0}, Poly::constant(2, 3));
  QVec origin2(2, Rational(0));
  Tensor ext = invariant_jet(flat, seed, origin2, 4);
  CHECK(ext == seed);

  Frame hf = heisenberg_frame();
  Connection c = Connection::from_frame(hf);
  QVec origin(3, Rational(0));
  {
    Tensor s(3, 1, 0);
    s.set({1}, Poly::constant(3, 1));
    Tensor jet = invariant_jet(c, s, origin, 1);
    CHECK(jet.at({1}) == Poly::constant(3, 1));
    CHECK(jet.at({2}) == Poly::variable(3, 1));
    // already exact at order one: the recursion terminates
    CHECK(invariant_jet(c, s, origin, 4) == jet);
  }
  {
    Tensor s(3, 1, 0);
    s.set({0}, Poly::constant(3, 1));
    Tensor jet = invariant_jet(c, s, origin, 3);
    CHECK(jet == s);
  }
  // agreement with the exact frame extension, through the jet order,
  // at a base point away from the origin
  Rng rng(41);
  QVec p{Rational(1), Rational(-1), Rational(2)};
  for (int t = 0; t < 3; ++t) {
    Tensor s(3, 1, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int v = rng.uniform(-2, 2);
        if (v) s.set({i, j}, Poly::constant(3, v));
      }
    Tensor viaframe = invariant_extension(hf, s, p);
    Tensor viajet = invariant_jet(c, s, p, 6);
    CHECK((viaframe - viajet).is_zero());  // both polynomial, degree <= 2
    CHECK(nabla_tilde(c, viaframe).is_zero());
  }
  // covariant derivative vanishes through the promised order for random seeds
  Connection cn = Connection::from_frame(random_unimodular_frame(rng, 3, 1));
  for (int t = 0; t < 3; ++t) {
    Tensor s(3, 1, 0);
    for (int i = 0; i < 3; ++i) {
      int v = rng.uniform(-2, 2);
      if (v) s.set({i}, Poly::constant(3, v));
    }
    int order = 3;
    Tensor jet = invariant_jet(cn, s, origin, order);
    Tensor defect = nabla_tilde(cn, jet);
    // all Taylor coefficients at the base point vanish through order-1
    bool ok = true;
    for (const auto& [idx, poly] : defect.components()) {
      for (const auto& [mono, coeff] : poly.terms())
        if (static_cast<int>(mono.degree()) <= order - 1) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("localization of torsion") {
  Connection c = Connection::from_frame(heisenberg_frame());
  for (const QVec& p : {QVec{Rational(0), Rational(0), Rational(0)},
                        QVec{Rational(2), Rational(-1), Rational(5)}}) {
    StructureConstants g = localize(torsion(c), p);
    CHECK(g.jacobi_ok());
    CHECK(g.at(2, 0, 1) == 1);
    CHECK(g.sparse().size() == 1);
  }
  Connection ce = Connection::from_frame(engel_frame());
  QVec p{Rational(1), Rational(2), Rational(-1), Rational(1, 2)};
  StructureConstants g = localize(torsion(ce), p);
  CHECK(g.at(2, 0, 1) == 1);
  CHECK(g.at(3, 0, 2) == 1);
  CHECK(g.sparse().size() == 2);
  CHECK(localize(torsion(Connection::from_frame(abelian_frame(3))),
                 QVec(3, Rational(0)))
            .sparse()
            .empty());
}

TEST_CASE("coordinate bracket of vector fields") {
  int n = 3;
  Tensor X = vector_field(n, {Poly::constant(n, 1), Poly(n), Poly(n)});
  Tensor Y = vector_field(n, {Poly(n), Poly::constant(n, 1), Poly::variable(n, 1)});
  Tensor br = lie_bracket_fields(X, Y);
  CHECK(br.at({2}) == Poly::constant(n, 1));
  CHECK(br.components().size() == 1);
  Rng rng(9);
  Tensor Z = vector_field(n, random_vector_field(rng, n, 2));
  CHECK(lie_bracket_fields(Z, Z).is_zero());
}

TEST_CASE("bracket against right-parallel fields is the covariant derivative") {
  // frozen right-parallel bases of the two nilpotent frames
  struct Case {
    Connection c;
    std::vector<PolyVec> basis;
  };
  int n3 = 3;
  Case heis{Connection::from_frame(heisenberg_frame()),
            {{Poly::constant(n3, 1), Poly(n3), Poly::variable(n3, 2)},
             {Poly(n3), Poly::constant(n3, 1), Poly(n3)},
             {Poly(n3), Poly(n3), Poly::constant(n3, 1)}}};
  int n4 = 4;
  Case engel{Connection::from_frame(engel_frame()),
             {{Poly::constant(n4, 1), Poly(n4), Poly::variable(n4, 2),
               Poly::variable(n4, 3)},
              {Poly(n4), Poly::constant(n4, 1), Poly(n4), Poly(n4)},
              {Poly(n4), Poly(n4), Poly::constant(n4, 1), Poly(n4)},
              {Poly(n4), Poly(n4), Poly(n4), Poly::constant(n4, 1)}}};
  Rng rng(13);
  for (const Case& cs : {heis, engel}) {
    int n = cs.c.dim();
    for (const auto& xb : cs.basis) {
      Tensor X = vector_field(n, xb);
      CHECK(nabla_hat(cs.c, X).is_zero());
      Tensor eta = vector_field(n, random_vector_field(rng, n, 2));
      Tensor lie = lie_bracket_fields(X, eta);
      Tensor nab = contract_direction(nabla_tilde(cs.c, eta), xb);
      CHECK((lie - nab).is_zero());
    }
  }
}
