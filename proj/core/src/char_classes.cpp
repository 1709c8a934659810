#include <llg/char_classes.hpp>

#include <algorithm>

namespace llg {

namespace {

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

Rational ScalarCochain::at(const std::vector<int>& idx) const {
  auto it = comp_.find(idx);
  return it == comp_.end() ? Rational(0) : it->second;
}

void ScalarCochain::set_antisym(const std::vector<int>& idx, const Rational& v) {
  std::vector<int> sorted = idx;
  int sgn = sort_sign(sorted);
  if (sgn == 0) return;
  std::vector<int> perm = sorted;
  do {
    std::vector<int> probe = perm;
    int s = sort_sign(probe);
    comp_.erase(perm);
    if (v != 0) comp_[perm] = v * sgn * s;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

AlgebraicCochain t_power(const StructureConstants& g, int power) {
  int n = g.dim();
  if (power < 1) throw std::invalid_argument("torsion power must be at least 1");
  if (power + 1 > n)
    throw std::invalid_argument("torsion power exceeds the top form degree");
  AlgebraicCochain cur(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) cur.add({i, j, k}, g.at(i, j, k));
  for (int p = 2; p <= power; ++p) {
    int k = p;  // previous degree
    auto inner = [&](int j0, int i, const std::vector<int>& js) {
      Rational acc = 0;
      for (int a = 0; a < n; ++a) {
        std::vector<int> key{a};
        key.insert(key.end(), js.begin(), js.end());
        acc += g.at(i, j0, a) * cur.at(key);
      }
      return acc;
    };
    AlgebraicCochain next(n, k + 1);
    // first-index alternation over (j0, js)
    std::vector<int> idx(k + 1, 0);
    for (int i = 0; i < n; ++i) {
      std::vector<int> full(k + 1, 0);
      for (;;) {
        int j0 = full[0];
        std::vector<int> js(full.begin() + 1, full.end());
        bool increasing = std::is_sorted(full.begin(), full.end()) &&
                          std::adjacent_find(full.begin(), full.end()) == full.end();
        if (increasing) {
          Rational acc = inner(j0, i, js);
          for (int q = 0; q < k; ++q) {
            std::vector<int> js2 = js;
            js2[q] = j0;
            acc -= inner(js[q], i, js2);
          }
          std::vector<int> key{i};
          key.insert(key.end(), full.begin(), full.end());
          next.set_antisym(key, acc);
        }
        int q = k;
        while (q >= 0) {
          if (++full[q] < n) break;
          full[q] = 0;
          --q;
        }
        if (q < 0) break;
      }
    }
    cur = next;
  }
  return cur;
}

Tensor t_power_field(const Tensor& torsion, int power) {
  int n = torsion.dim();
  if (power < 1) throw std::invalid_argument("torsion power must be at least 1");
  Tensor cur = torsion;  // (1,2) antisym
  for (int p = 2; p <= power; ++p) {
    int k = p;
    Tensor inner(n, 1, k + 1, k);
    inner.for_each_index([&](const TIndex& idx) {
      // idx = (i, j0, j1..jk)
      Poly acc(n);
      for (int a = 0; a < n; ++a) {
        TIndex key{a};
        key.insert(key.end(), idx.begin() + 2, idx.end());
        acc += torsion.at({idx[0], idx[1], a}) * cur.at(key);
      }
      if (!acc.is_zero()) inner.set(idx, std::move(acc));
    });
    cur = alternate_first_unchecked(inner);
  }
  return cur;
}

ScalarCochain scalar_differential(const StructureConstants& g, const ScalarCochain& s) {
  int n = g.dim();
  int k = s.degree();
  auto inner = [&](int r, const std::vector<int>& js) {
    Rational acc = 0;
    for (int q = 0; q < k; ++q)
      for (int a = 0; a < n; ++a) {
        std::vector<int> key(js);
        key[q] = a;
        acc -= g.at(a, r, js[q]) * s.at(key) / 2;
      }
    return acc;
  };
  ScalarCochain out(n, k + 1);
  std::vector<int> full(k + 1, 0);
  for (;;) {
    bool increasing = std::is_sorted(full.begin(), full.end()) &&
                      std::adjacent_find(full.begin(), full.end()) == full.end();
    if (increasing) {
      int r = full[0];
      std::vector<int> js(full.begin() + 1, full.end());
      Rational acc = inner(r, js);
      for (int q = 0; q < k; ++q) {
        std::vector<int> js2 = js;
        js2[q] = r;
        acc -= inner(js[q], js2);
      }
      out.set_antisym(full, acc);
    }
    int q = k;
    while (q >= 0) {
      if (++full[q] < n) break;
      full[q] = 0;
      --q;
    }
    if (q < 0) break;
  }
  return out;
}

ScalarCochain trace_map(const AlgebraicCochain& w) {
  int n = w.dim();
  int k = w.degree();
  if (k < 1) throw std::invalid_argument("trace map needs at least one lower index");
  ScalarCochain out(n, k - 1);
  std::vector<int> js(k - 1, 0);
  bool done = k - 1 == 0;
  for (;;) {
    bool increasing = std::is_sorted(js.begin(), js.end()) &&
                      std::adjacent_find(js.begin(), js.end()) == js.end();
    if (increasing || js.empty()) {
      Rational acc = 0;
      for (int a = 0; a < n; ++a) {
        std::vector<int> key{a};
        key.insert(key.end(), js.begin(), js.end());
        key.push_back(a);
        acc += w.at(key);
      }
      out.set_antisym(js, acc);
    }
    if (js.empty()) break;
    int q = k - 2;
    while (q >= 0) {
      if (++js[q] < n) break;
      js[q] = 0;
      --q;
    }
    if (q < 0) break;
  }
  (void)done;
  return out;
}

ClosednessVerdict closedness(const Connection& c, const QVec& p, int k) {
  if (!curvature_hat(c).is_zero())
    throw NotLocalLieError(
        "characteristic classes are defined only when the hat curvature vanishes");
  int power = 2 * k - 1;
  Tensor T = torsion(c);
  ClosednessVerdict v;
  v.power = power;
  Tensor tp = t_power_field(T, power);
  v.field_closed = d_hat(c, tp).is_zero();
  StructureConstants g = localize(T, p);
  AlgebraicCochain tpc = t_power(g, power);
  v.point_closed = differential_D(g, tpc).is_zero();
  return v;
}

ExactnessResult class_is_exact(const StructureConstants& g, const AlgebraicCochain& w) {
  int n = g.dim();
  int k = w.degree();
  if (!differential_D(g, w).is_zero())
    throw std::invalid_argument("exactness query requires a closed cochain");
  ExactnessResult res;
  if (k == 0) {
    res.exact = w.is_zero();
    res.certificate = AlgebraicCochain(n, 0);
    return res;
  }
  QMat D = differential_matrix(g, k - 1);
  auto sol = solve(D, w.coordinates());
  if (sol) {
    res.exact = true;
    res.certificate = AlgebraicCochain::from_coordinates(n, k - 1, *sol);
  }
  return res;
}

}  // namespace llg
