#include <llg/lie_algebra.hpp>

#include <algorithm>

namespace llg {

namespace {

// Enumerate k-element increasing index tuples in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int q = k - 1;
    while (q >= 0 && cur[q] == n - k + q) --q;
    if (q < 0) break;
    ++cur[q];
    for (int l = q + 1; l < k; ++l) cur[l] = cur[l - 1] + 1;
  }
  if (k == 0) out = {std::vector<int>{}};
  return out;
}

int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    for (size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

}  // namespace

StructureConstants::StructureConstants(int n, std::map<std::array<int, 3>, Rational> c)
    : n_(n), c_(std::move(c)) {
  if (n_ < 2) throw std::invalid_argument("algebra dimension must be at least 2");
  for (const auto& [idx, v] : c_) {
    auto [i, j, k] = idx;
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_)
      throw std::invalid_argument("structure constant index out of range");
    if (j == k && v != 0)
      throw std::invalid_argument("structure constants must vanish on repeated lower indices");
    if (at(i, j, k) != -at(i, k, j))
      throw std::invalid_argument("structure constants must be antisymmetric");
  }
  // Jacobi verdict: nested-bracket cyclic sum on every basis triple.
  jacobi_ = !jacobi_witness().has_value();
}

StructureConstants StructureConstants::from_sparse(
    int n, const std::vector<std::tuple<int, int, int, Rational>>& entries) {
  std::map<std::array<int, 3>, Rational> c;
  for (const auto& [i, j, k, v] : entries) {
    if (j >= k) throw std::invalid_argument("sparse structure constants need j < k");
    c[{i, j, k}] += v;
    c[{i, k, j}] -= v;
  }
  for (auto it = c.begin(); it != c.end();)
    it = it->second == 0 ? c.erase(it) : std::next(it);
  return StructureConstants(n, std::move(c));
}

Rational StructureConstants::at(int i, int j, int k) const {
  auto it = c_.find({i, j, k});
  return it == c_.end() ? Rational(0) : it->second;
}

std::vector<std::tuple<int, int, int, Rational>> StructureConstants::sparse() const {
  std::vector<std::tuple<int, int, int, Rational>> out;
  for (const auto& [idx, v] : c_)
    if (idx[1] < idx[2]) out.emplace_back(idx[0], idx[1], idx[2], v);
  return out;
}

QVec StructureConstants::bracket(const QVec& x, const QVec& y) const {
  QVec out(n_, Rational(0));
  for (const auto& [idx, v] : c_) out[idx[0]] += v * x[idx[1]] * y[idx[2]];
  return out;
}

std::optional<std::array<int, 3>> StructureConstants::jacobi_witness() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      for (int z = y + 1; z < n_; ++z)
        for (int i = 0; i < n_; ++i) {
          Rational s = 0;
          for (int a = 0; a < n_; ++a)
            s += at(i, x, a) * at(a, y, z) + at(i, z, a) * at(a, x, y) +
                 at(i, y, a) * at(a, z, x);
          if (s != 0) return std::array<int, 3>{x, y, z};
        }
  return std::nullopt;
}

AlgebraicCochain::AlgebraicCochain(int n, int degree) : n_(n), deg_(degree) {
  if (degree < 0 || degree > n)
    throw std::invalid_argument("cochain degree out of range");
}

Rational AlgebraicCochain::at(const std::vector<int>& idx) const {
  auto it = comp_.find(idx);
  return it == comp_.end() ? Rational(0) : it->second;
}

void AlgebraicCochain::add(const std::vector<int>& idx, const Rational& v) {
  if (v == 0) return;
  auto it = comp_.find(idx);
  if (it == comp_.end()) {
    comp_.emplace(idx, v);
  } else {
    it->second += v;
    if (it->second == 0) comp_.erase(it);
  }
}

void AlgebraicCochain::set_antisym(const std::vector<int>& idx, const Rational& v) {
  std::vector<int> lower(idx.begin() + 1, idx.end());
  std::vector<int> sorted = lower;
  int sgn = sort_sign(sorted);
  if (sgn == 0) {
    if (v != 0) throw std::invalid_argument("repeated lower index with nonzero value");
    return;
  }
  // write every permutation of the sorted tuple with its sign
  std::vector<int> perm = sorted;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<int> probe = perm;
    int s = sort_sign(probe);
    std::vector<int> key{idx[0]};
    key.insert(key.end(), perm.begin(), perm.end());
    comp_.erase(key);
    if (v != 0) comp_[key] = v * sgn * s;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool AlgebraicCochain::is_zero() const { return comp_.empty(); }

AlgebraicCochain AlgebraicCochain::operator+(const AlgebraicCochain& o) const {
  AlgebraicCochain r = *this;
  for (const auto& [idx, v] : o.comp_) r.add(idx, v);
  return r;
}

AlgebraicCochain AlgebraicCochain::operator-(const AlgebraicCochain& o) const {
  AlgebraicCochain r = *this;
  for (const auto& [idx, v] : o.comp_) r.add(idx, -v);
  return r;
}

AlgebraicCochain AlgebraicCochain::scaled(const Rational& c) const {
  AlgebraicCochain r(n_, deg_);
  if (c == 0) return r;
  for (const auto& [idx, v] : comp_) r.comp_[idx] = v * c;
  return r;
}

bool AlgebraicCochain::operator==(const AlgebraicCochain& o) const {
  return n_ == o.n_ && deg_ == o.deg_ && comp_ == o.comp_;
}

bool AlgebraicCochain::verify_antisym() const {
  for (const auto& [idx, v] : comp_) {
    std::vector<int> lower(idx.begin() + 1, idx.end());
    std::vector<int> sorted = lower;
    int sgn = sort_sign(sorted);
    if (sgn == 0) return false;
    std::vector<int> key{idx[0]};
    key.insert(key.end(), sorted.begin(), sorted.end());
    if (at(key) * sgn != v) return false;
  }
  return true;
}

int AlgebraicCochain::space_dim(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return static_cast<int>(n * c);
}

QVec AlgebraicCochain::coordinates() const {
  auto combos = combinations(n_, deg_);
  QVec out;
  out.reserve(space_dim(n_, deg_));
  for (int i = 0; i < n_; ++i)
    for (const auto& js : combos) {
      std::vector<int> key{i};
      key.insert(key.end(), js.begin(), js.end());
      out.push_back(at(key));
    }
  return out;
}

AlgebraicCochain AlgebraicCochain::from_coordinates(int n, int k, const QVec& coords) {
  AlgebraicCochain w(n, k);
  auto combos = combinations(n, k);
  size_t q = 0;
  for (int i = 0; i < n; ++i)
    for (const auto& js : combos) {
      std::vector<int> key{i};
      key.insert(key.end(), js.begin(), js.end());
      w.set_antisym(key, coords.at(q++));
    }
  return w;
}

namespace {

void require_jacobi(const StructureConstants& g) {
  if (!g.jacobi_ok()) {
    auto w = g.jacobi_witness();
    throw JacobiError("Jacobi identity fails on basis triple (" +
                      std::to_string((*w)[0] + 1) + "," + std::to_string((*w)[1] + 1) +
                      "," + std::to_string((*w)[2] + 1) + ")");
  }
}

}  // namespace

AlgebraicCochain differential_D(const StructureConstants& g, const AlgebraicCochain& w) {
  require_jacobi(g);
  int n = g.dim();
  int k = w.degree();
  // inner(r; i, js) = -sum_a c(i,a,r) w(a,js) - sum_q sum_a c(a,r,js[q])/2 * w(i, js[q->a])
  auto inner = [&](int r, int i, const std::vector<int>& js) {
    Rational acc = 0;
    for (int a = 0; a < n; ++a) {
      std::vector<int> key{a};
      key.insert(key.end(), js.begin(), js.end());
      acc -= g.at(i, a, r) * w.at(key);
    }
    for (int q = 0; q < k; ++q) {
      for (int a = 0; a < n; ++a) {
        std::vector<int> key{i};
        key.insert(key.end(), js.begin(), js.end());
        key[1 + q] = a;
        acc -= g.at(a, r, js[q]) * w.at(key) / 2;
      }
    }
    return acc;
  };
  AlgebraicCochain out(n, k + 1);
  auto combos = combinations(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (const auto& full : combos) {
      int r = full[0];
      std::vector<int> js(full.begin() + 1, full.end());
      Rational acc = inner(r, i, js);
      for (int q = 0; q < k; ++q) {
        std::vector<int> js2 = js;
        js2[q] = r;
        acc -= inner(js[q], i, js2);
      }
      std::vector<int> key{i};
      key.insert(key.end(), full.begin(), full.end());
      out.set_antisym(key, acc);
    }
  }
  return out;
}

AlgebraicCochain ce_oracle_differential(const StructureConstants& g,
                                        const AlgebraicCochain& w) {
  require_jacobi(g);
  int n = g.dim();
  int k = w.degree();
  AlgebraicCochain out(n, k + 1);
  auto combos = combinations(n, k + 1);
  for (int m = 0; m < n; ++m) {
    for (const auto& args : combos) {
      Rational acc = 0;
      for (int q = 0; q <= k; ++q) {
        std::vector<int> rest;
        for (int l = 0; l <= k; ++l)
          if (l != q) rest.push_back(args[l]);
        for (int a = 0; a < n; ++a) {
          std::vector<int> key{a};
          key.insert(key.end(), rest.begin(), rest.end());
          Rational term = g.at(m, args[q], a) * w.at(key);
          acc += (q % 2 == 0) ? term : -term;
        }
      }
      for (int q = 0; q <= k; ++q) {
        for (int l = q + 1; l <= k; ++l) {
          std::vector<int> rest;
          for (int u = 0; u <= k; ++u)
            if (u != q && u != l) rest.push_back(args[u]);
          for (int a = 0; a < n; ++a) {
            std::vector<int> key{m, a};
            key.insert(key.end(), rest.begin(), rest.end());
            Rational term = g.at(a, args[q], args[l]) * w.at(key);
            acc += ((q + l) % 2 == 0) ? term : -term;
          }
        }
      }
      std::vector<int> key{m};
      key.insert(key.end(), args.begin(), args.end());
      out.set_antisym(key, acc);
    }
  }
  return out;
}

std::vector<QVec> center(const StructureConstants& g) {
  int n = g.dim();
  QMat rows;
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r) {
      QVec row(n);
      for (int a = 0; a < n; ++a) row[a] = g.at(i, r, a);
      rows.push_back(std::move(row));
    }
  return nullspace(rows);
}

std::vector<QVec> derived_algebra(const StructureConstants& g) {
  int n = g.dim();
  RowSpace span(n);
  std::vector<QVec> basis;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      QVec v(n);
      for (int i = 0; i < n; ++i) v[i] = g.at(i, j, k);
      span.insert(v);
    }
  return span.rows();
}

std::vector<QVec> derivations(const StructureConstants& g) {
  int n = g.dim();
  QMat rows;
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int j = r + 1; j < n; ++j) {
        QVec row(n * n, Rational(0));
        for (int a = 0; a < n; ++a) {
          row[i * n + a] += g.at(a, r, j);
          row[a * n + r] -= g.at(i, a, j);
          row[a * n + j] -= g.at(i, r, a);
        }
        rows.push_back(std::move(row));
      }
  return nullspace(rows);
}

std::vector<QVec> inner_derivations(const StructureConstants& g) {
  int n = g.dim();
  RowSpace span(n * n);
  for (int a = 0; a < n; ++a) {
    QVec v(n * n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = g.at(i, a, j);
    span.insert(v);
  }
  return span.rows();
}

namespace {

QMat operator_matrix(const StructureConstants& g, int k,
                     AlgebraicCochain (*op)(const StructureConstants&,
                                            const AlgebraicCochain&)) {
  int n = g.dim();
  int dom = AlgebraicCochain::space_dim(n, k);
  int cod = AlgebraicCochain::space_dim(n, k + 1);
  QMat m(cod, QVec(dom, Rational(0)));
  for (int c = 0; c < dom; ++c) {
    QVec e(dom, Rational(0));
    e[c] = 1;
    AlgebraicCochain w = AlgebraicCochain::from_coordinates(n, k, e);
    QVec img = op(g, w).coordinates();
    for (int r = 0; r < cod; ++r) m[r][c] = img[r];
  }
  return m;
}

}  // namespace

QMat differential_matrix(const StructureConstants& g, int k) {
  return operator_matrix(g, k, &differential_D);
}

QMat ce_oracle_matrix(const StructureConstants& g, int k) {
  return operator_matrix(g, k, &ce_oracle_differential);
}

int CohomologyReport::euler_characteristic() const {
  int chi = 0;
  for (const auto& d : by_degree) chi += (d.degree % 2 == 0) ? d.h_dim : -d.h_dim;
  return chi;
}

CohomologyReport cohomology(const StructureConstants& g, int max_degree) {
  require_jacobi(g);
  int n = g.dim();
  if (max_degree < 0 || max_degree > n)
    throw std::invalid_argument("cohomology degree must lie between 0 and the dimension");
  CohomologyReport rep;
  rep.n = n;
  rep.max_degree = max_degree;

  int prev_rank = 0;
  RowSpace image(AlgebraicCochain::space_dim(n, 0));
  for (int k = 0; k <= max_degree; ++k) {
    DegreeReport d;
    d.degree = k;
    d.space_dim = AlgebraicCochain::space_dim(n, k);

    std::vector<QVec> kernel;
    if (k < n) {
      QMat Dk = differential_matrix(g, k);
      d.rank = rank(Dk);
      kernel = nullspace(Dk);
    } else {
      d.rank = 0;
      kernel.clear();
      for (int c = 0; c < d.space_dim; ++c) {
        QVec e(d.space_dim, Rational(0));
        e[c] = 1;
        kernel.push_back(std::move(e));
      }
    }
    d.kernel_dim = static_cast<int>(kernel.size());
    d.h_dim = d.kernel_dim - prev_rank;

    for (const auto& v : kernel) {
      QVec red = image.reduce(v);
      if (!is_zero(red)) {
        // normalize the leading entry for a deterministic representative
        int lead = 0;
        while (red[lead] == 0) ++lead;
        Rational f = red[lead];
        for (auto& x : red) x /= f;
        d.representatives.push_back(AlgebraicCochain::from_coordinates(n, k, red));
        image.insert(red);
      }
    }

    rep.by_degree.push_back(std::move(d));

    if (k < max_degree) {
      // image of D_k feeds the next degree
      QMat Dk = differential_matrix(g, k);
      prev_rank = rank(Dk);
      image = RowSpace(AlgebraicCochain::space_dim(n, k + 1));
      int dom = AlgebraicCochain::space_dim(n, k);
      for (int c = 0; c < dom; ++c) {
        QVec col(Dk.size());
        for (size_t r = 0; r < Dk.size(); ++r) col[r] = Dk[r][c];
        image.insert(col);
      }
    }
  }
  return rep;
}

}  // namespace llg
