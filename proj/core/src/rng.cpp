#include <llg/rng.hpp>

namespace llg {

uint64_t Rng::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Rng Rng::fork() { return Rng(next() ^ 0xa5a5a5a5deadbeefULL); }

Poly random_poly(Rng& rng, int n, int max_degree, int percent_density) {
  Poly p(n);
  // enumerate exponent tuples of total degree <= max_degree
  std::vector<unsigned> exp(n, 0);
  for (;;) {
    unsigned total = 0;
    for (unsigned e : exp) total += e;
    if (total <= static_cast<unsigned>(max_degree) &&
        rng.uniform(1, 100) <= percent_density) {
      int c = rng.uniform(-3, 3);
      if (c != 0) p.add_term(Monomial{exp}, Rational(c));
    }
    int q = n - 1;
    while (q >= 0) {
      if (++exp[q] <= static_cast<unsigned>(max_degree)) break;
      exp[q] = 0;
      --q;
    }
    if (q < 0) break;
  }
  return p;
}

Frame random_unimodular_frame(Rng& rng, int n, int max_degree) {
  PolyMat e = poly_mat_identity(n);
  PolyMat nilp = poly_mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < i; ++a) {
      nilp[i][a] = random_poly(rng, n, max_degree, 60);
      e[i][a] = nilp[i][a];
    }
  // w = sum over powers of (-nilp)
  PolyMat w = poly_mat_identity(n);
  PolyMat acc = poly_mat_identity(n);
  PolyMat neg = poly_mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) neg[i][j] = -nilp[i][j];
  for (int q = 1; q < n; ++q) {
    acc = poly_mat_mul(acc, neg);
    w = poly_mat_add(w, acc);
  }
  return Frame(std::move(e), std::move(w));
}

Tensor random_gamma(Rng& rng, int n, int max_degree) {
  Tensor g(n, 1, 2);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        if (rng.uniform(1, 100) <= 35) {
          Poly p = random_poly(rng, n, max_degree, 40);
          if (!p.is_zero()) g.set({i, k, j}, std::move(p));
        }
      }
  return g;
}

PolyVec random_vector_field(Rng& rng, int n, int max_degree) {
  PolyVec v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(random_poly(rng, n, max_degree, 60));
  return v;
}

StructureConstants random_jacobi_constants(Rng& rng, int n) {
  // Seed brackets on the first basis vectors, then conjugate by a random
  // unimodular matrix; the result satisfies Jacobi by construction.
  std::map<std::array<int, 3>, Rational> base;
  auto put = [&](int i, int j, int k, int v) {
    if (v == 0) return;
    base[{i, j, k}] += v;
    base[{i, k, j}] -= v;
  };
  if (n == 2) {
    put(1, 0, 1, rng.uniform(-2, 2));
  } else {
    put(2, 0, 1, rng.uniform(-2, 2));   // nilpotent direction
    put(1, 0, 1, rng.uniform(0, 1));    // solvable direction, compatible
    if (n >= 4) put(3, 0, 2, rng.uniform(-2, 2));
  }
  for (auto it = base.begin(); it != base.end();)
    it = it->second == 0 ? base.erase(it) : std::next(it);
  StructureConstants seed(n, std::move(base));
  if (!seed.jacobi_ok()) return random_jacobi_constants(rng, n);  // defensive resample

  // random unimodular P via elementary row operations
  QMat P = mat_identity(n);
  for (int step = 0; step < 4; ++step) {
    int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
    if (i == j) continue;
    Rational lam(rng.uniform(-2, 2));
    for (int col = 0; col < n; ++col) P[i][col] += lam * P[j][col];
  }
  // invert exactly
  QMat aug(n, QVec(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = P[i][j];
    aug[i][n + i] = 1;
  }
  rref(aug);
  QMat Pinv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Pinv[i][j] = aug[i][n + j];

  std::map<std::array<int, 3>, Rational> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational s = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              s += Pinv[i][a] * seed.at(a, b, c) * P[b][j] * P[c][k];
        if (s != 0) out[{i, j, k}] = s;
      }
  return StructureConstants(n, std::move(out));
}

AlgebraicCochain random_cochain(Rng& rng, int n, int degree) {
  int d = AlgebraicCochain::space_dim(n, degree);
  QVec coords(d);
  for (int i = 0; i < d; ++i) coords[i] = rng.uniform(-3, 3);
  return AlgebraicCochain::from_coordinates(n, degree, coords);
}

}  // namespace llg
