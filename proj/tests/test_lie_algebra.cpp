#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <llg/examples.hpp>
#include <llg/lie_algebra.hpp>
#include <llg/rng.hpp>

#include <set>

using namespace llg;

namespace {

// Brute-force derivation solver used as the independent oracle: builds the
// full (n^2) x (n^3) defect system row by row without reusing the library's
// equation assembly.
int derivation_dim_oracle(const StructureConstants& g) {
  int n = g.dim();
  QMat rows;
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        QVec row(n * n, Rational(0));
        // D[c(e_r,e_j)] - [D e_r, e_j] - [e_r, D e_j], coefficient of e_i
        for (int a = 0; a < n; ++a) {
          row[i * n + a] += g.at(a, r, j);
          row[a * n + r] -= g.at(i, a, j);
          row[a * n + j] -= g.at(i, r, a);
        }
        rows.push_back(std::move(row));
      }
  return n * n - rank(rows);
}

}  // namespace

TEST_CASE("structure constant construction and verdicts") {
  StructureConstants h = heisenberg_constants();
  CHECK(h.jacobi_ok());
  CHECK(h.at(2, 0, 1) == 1);
  CHECK(h.at(2, 1, 0) == -1);

  CHECK(sl2_constants().jacobi_ok());
  CHECK(engel_constants().jacobi_ok());

  // [e1,e2]=e3, [e1,e3]=e1 violates the Jacobi identity
  StructureConstants bad = StructureConstants::from_sparse(
      3, {{2, 0, 1, Rational(1)}, {0, 0, 2, Rational(1)}});
  CHECK(!bad.jacobi_ok());
  CHECK(bad.jacobi_witness().has_value());
  CHECK_THROWS_AS(cohomology(bad, 1), JacobiError);
  CHECK_THROWS_AS(differential_D(bad, AlgebraicCochain(3, 0)), JacobiError);

  CHECK_THROWS(StructureConstants::from_sparse(2, {{0, 1, 1, Rational(1)}}));
  CHECK_THROWS(StructureConstants(1, {}));
}

TEST_CASE("center and derived algebra") {
  CHECK(center(abelian_constants(2)).size() == 2);
  CHECK(derived_algebra(abelian_constants(2)).empty());

  auto zc = center(heisenberg_constants());
  REQUIRE(zc.size() == 1);
  CHECK(zc[0] == QVec{Rational(0), Rational(0), Rational(1)});
  auto dh = derived_algebra(heisenberg_constants());
  REQUIRE(dh.size() == 1);
  CHECK(dh[0] == QVec{Rational(0), Rational(0), Rational(1)});

  CHECK(center(sl2_constants()).empty());
  CHECK(derived_algebra(sl2_constants()).size() == 3);
  CHECK(center(engel_constants()).size() == 1);
  CHECK(derived_algebra(engel_constants()).size() == 2);
  CHECK(center(aff1_constants()).empty());
  CHECK(derived_algebra(aff1_constants()).size() == 1);
}

TEST_CASE("derivations and inner derivations") {
  struct Row {
    StructureConstants g;
    int der, inn;
  };
  for (const Row& row : {Row{abelian_constants(2), 4, 0},
                         Row{heisenberg_constants(), 6, 2},
                         Row{sl2_constants(), 3, 3},
                         Row{engel_constants(), 7, 3},
                         Row{aff1_constants(), 2, 2}}) {
    CHECK(static_cast<int>(derivations(row.g).size()) == row.der);
    CHECK(static_cast<int>(inner_derivations(row.g).size()) == row.inn);
    CHECK(derivation_dim_oracle(row.g) == row.der);
    // inner derivations are derivations
    RowSpace span(row.g.dim() * row.g.dim());
    for (const auto& d : derivations(row.g)) span.insert(d);
    for (const auto& d : inner_derivations(row.g)) CHECK(span.contains(d));
  }
}

TEST_CASE("differential on low degrees") {
  StructureConstants h = heisenberg_constants();
  // identity matrix as a degree-1 cochain maps to the bracket cochain
  AlgebraicCochain idm(3, 1);
  for (int i = 0; i < 3; ++i) idm.add({i, i}, 1);
  AlgebraicCochain d = differential_D(h, idm);
  CHECK(d.at({2, 0, 1}) == 1);
  CHECK(d.at({2, 1, 0}) == -1);
  // all other independent entries vanish
  int nonzero = 0;
  for (const auto& [idx, v] : d.components())
    if (idx[1] < idx[2] && v != 0) ++nonzero;
  CHECK(nonzero == 1);

  // abelian differential vanishes in every degree
  StructureConstants ab = abelian_constants(3);
  Rng rng(4);
  for (int k = 0; k < 3; ++k)
    CHECK(differential_D(ab, random_cochain(rng, 3, k)).is_zero());

  // degree-1 kernel is exactly the space of derivations
  QMat d1 = differential_matrix(h, 1);
  auto ker = nullspace(d1);
  CHECK(ker.size() == derivations(h).size());
  RowSpace der_span(9);
  for (const auto& v : derivations(h)) der_span.insert(v);
  for (const auto& v : ker) {
    // kernel coordinates are (i, j) pairs in basis order = row-major matrices
    CHECK(der_span.contains(v));
  }
}

TEST_CASE("differential squares to zero and matches the oracle exactly") {
  Rng rng(1234);
  for (int t = 0; t < 20; ++t) {
    int n = 3 + t % 2;
    StructureConstants g = random_jacobi_constants(rng, n);
    for (int k = 0; k + 2 <= n; ++k) {
      AlgebraicCochain w = random_cochain(rng, n, k);
      CHECK(differential_D(g, differential_D(g, w)).is_zero());
    }
    for (int k = 0; k < n; ++k) {
      CHECK(differential_matrix(g, k) == ce_oracle_matrix(g, k));
      AlgebraicCochain w = random_cochain(rng, n, k);
      CHECK(ce_oracle_differential(g, ce_oracle_differential(g, w)).is_zero());
    }
  }
}

TEST_CASE("cohomology tables") {
  auto dims = [](const StructureConstants& g) {
    CohomologyReport rep = cohomology(g, g.dim());
    std::vector<int> h;
    for (const auto& d : rep.by_degree) h.push_back(d.h_dim);
    return h;
  };
  CHECK(dims(abelian_constants(2)) == std::vector<int>{2, 4, 2});
  CHECK(dims(heisenberg_constants()) == std::vector<int>{1, 4, 5, 2});
  CHECK(dims(sl2_constants()) == std::vector<int>{0, 0, 0, 0});
  CHECK(dims(engel_constants()) == std::vector<int>{1, 4, 6, 5, 2});
  CHECK(dims(aff1_constants()) == std::vector<int>{0, 0, 0});
  // abelian: no differential, every degree is the full cochain space
  for (int n : {2, 3, 4}) {
    CohomologyReport rep = cohomology(abelian_constants(n), n);
    for (int k = 0; k <= n; ++k)
      CHECK(rep.by_degree[k].h_dim == AlgebraicCochain::space_dim(n, k));
  }
}

TEST_CASE("cohomology cross-checks and representatives") {
  Rng rng(88);
  for (int t = 0; t < 10; ++t) {
    int n = 3 + t % 2;
    StructureConstants g = random_jacobi_constants(rng, n);
    CohomologyReport rep = cohomology(g, n);
    CHECK(rep.by_degree[0].h_dim == static_cast<int>(center(g).size()));
    CHECK(rep.by_degree[1].h_dim ==
          static_cast<int>(derivations(g).size() - inner_derivations(g).size()));
    CHECK(rep.euler_characteristic() == 0);
    for (const auto& d : rep.by_degree) {
      CHECK(static_cast<int>(d.representatives.size()) == d.h_dim);
      for (const auto& r : d.representatives) {
        CHECK(r.verify_antisym());
        if (d.degree < n) CHECK(differential_D(g, r).is_zero());
      }
    }
  }
  // determinism of representatives
  CohomologyReport a = cohomology(heisenberg_constants(), 3);
  CohomologyReport b = cohomology(heisenberg_constants(), 3);
  for (size_t k = 0; k < a.by_degree.size(); ++k) {
    REQUIRE(a.by_degree[k].representatives.size() ==
            b.by_degree[k].representatives.size());
    for (size_t q = 0; q < a.by_degree[k].representatives.size(); ++q)
      CHECK(a.by_degree[k].representatives[q] == b.by_degree[k].representatives[q]);
  }
}

TEST_CASE("cochain coordinate round trip") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    int n = rng.uniform(2, 4);
    int k = rng.uniform(0, n);
    AlgebraicCochain w = random_cochain(rng, n, k);
    CHECK(AlgebraicCochain::from_coordinates(n, k, w.coordinates()) == w);
    CHECK(w.verify_antisym());
  }
  CHECK(AlgebraicCochain::space_dim(3, 2) == 9);
  CHECK(AlgebraicCochain::space_dim(4, 2) == 24);
}
