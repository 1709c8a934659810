#include <llg/connection.hpp>
#include <llg/lie_algebra.hpp>

#include <stdexcept>

namespace llg {

Connection Connection::raw(Tensor gamma) {
  if (gamma.upper() != 1 || gamma.lower() != 2)
    throw std::invalid_argument("connection table must have valence (1,2)");
  Connection c;
  c.n_ = gamma.dim();
  c.gamma_ = std::move(gamma);
  c.frame_derived_ = false;
  return c;
}

Connection Connection::from_frame(const Frame& f) {
  int n = f.dim();
  Tensor g(n, 1, 2);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Poly acc(n);
        for (int a = 0; a < n; ++a) acc += f.e()[i][a].diff(k + 1) * f.w()[a][j];
        if (!acc.is_zero()) g.set({i, k, j}, std::move(acc));
      }
  Connection c;
  c.n_ = n;
  c.gamma_ = std::move(g);
  c.frame_derived_ = true;
  return c;
}

Tensor torsion(const Connection& c) {
  int n = c.dim();
  Tensor t(n, 1, 2, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly v = c.gamma().at({i, j, k}) - c.gamma().at({i, k, j});
        if (!v.is_zero()) t.set({i, j, k}, std::move(v));
      }
  return t;
}

Tensor curvature_tilde(const Connection& c) {
  int n = c.dim();
  const Tensor& g = c.gamma();
  Tensor r(n, 1, 3);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)  // r index
      for (int b = 0; b < n; ++b)  // j index
        for (int k = 0; k < n; ++k) {
          Poly acc = g.at({i, b, k}).diff(a + 1) - g.at({i, a, k}).diff(b + 1);
          for (int q = 0; q < n; ++q) {
            acc += g.at({q, a, k}) * g.at({i, b, q});
            acc -= g.at({q, b, k}) * g.at({i, a, q});
          }
          if (!acc.is_zero()) r.set({i, a, b, k}, std::move(acc));
        }
  return r;
}

Tensor curvature_hat(const Connection& c) {
  int n = c.dim();
  const Tensor& g = c.gamma();
  Tensor r(n, 1, 3);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)  // r index
      for (int b = 0; b < n; ++b)  // j index
        for (int k = 0; k < n; ++k) {
          Poly acc = g.at({i, k, b}).diff(a + 1) - g.at({i, k, a}).diff(b + 1);
          for (int q = 0; q < n; ++q) {
            acc += g.at({q, k, a}) * g.at({i, q, b});
            acc -= g.at({q, k, b}) * g.at({i, q, a});
          }
          if (!acc.is_zero()) r.set({i, a, b, k}, std::move(acc));
        }
  return r;
}

namespace {

// Shared covariant-derivative kernel; `hat` swaps the two lower gamma slots.
Tensor covariant_derivative(const Connection& c, const Tensor& xi, bool hat) {
  int n = c.dim();
  int r = xi.upper(), s = xi.lower();
  const Tensor& g = c.gamma();
  Tensor out(n, r, s + 1);
  out.for_each_index([&](const TIndex& oidx) {
    // oidx = (uppers..., l, lowers...)
    int l = oidx[r];
    TIndex base(oidx.begin(), oidx.begin() + r);
    base.insert(base.end(), oidx.begin() + r + 1, oidx.end());
    Poly acc = xi.at(base).diff(l + 1);
    for (int q = 0; q < r; ++q) {
      for (int a = 0; a < n; ++a) {
        TIndex sub = base;
        sub[q] = a;
        const Poly& gam = hat ? g.at({base[q], a, l}) : g.at({base[q], l, a});
        acc -= gam * xi.at(sub);
      }
    }
    for (int q = 0; q < s; ++q) {
      for (int a = 0; a < n; ++a) {
        TIndex sub = base;
        sub[r + q] = a;
        const Poly& gam = hat ? g.at({a, base[r + q], l}) : g.at({a, l, base[r + q]});
        acc += gam * xi.at(sub);
      }
    }
    if (!acc.is_zero()) out.set(oidx, std::move(acc));
  });
  return out;
}

}  // namespace

Tensor nabla_tilde(const Connection& c, const Tensor& xi) {
  return covariant_derivative(c, xi, false);
}

Tensor nabla_hat(const Connection& c, const Tensor& xi) {
  return covariant_derivative(c, xi, true);
}

Tensor contract_direction(const Tensor& nabla_xi, const PolyVec& x) {
  int n = nabla_xi.dim();
  int r = nabla_xi.upper(), s = nabla_xi.lower() - 1;
  Tensor out(n, r, s);
  out.for_each_index([&](const TIndex& oidx) {
    Poly acc(n);
    for (int l = 0; l < n; ++l) {
      TIndex full(oidx.begin(), oidx.begin() + r);
      full.push_back(l);
      full.insert(full.end(), oidx.begin() + r, oidx.end());
      acc += nabla_xi.at(full) * x[l];
    }
    if (!acc.is_zero()) out.set(oidx, std::move(acc));
  });
  return out;
}

Tensor vector_field(int n, const PolyVec& comps) {
  Tensor v(n, 1, 0);
  for (int i = 0; i < n; ++i)
    if (!comps[i].is_zero()) v.set({i}, comps[i]);
  return v;
}

PolyVec vector_components(const Tensor& v) {
  PolyVec out(v.dim(), Poly(v.dim()));
  for (int i = 0; i < v.dim(); ++i) out[i] = v.at({i});
  return out;
}

Tensor lie_bracket_fields(const Tensor& x, const Tensor& y) {
  int n = x.dim();
  Tensor out(n, 1, 0);
  for (int i = 0; i < n; ++i) {
    Poly acc(n);
    for (int a = 0; a < n; ++a) {
      acc += x.at({a}) * y.at({i}).diff(a + 1);
      acc -= y.at({a}) * x.at({i}).diff(a + 1);
    }
    if (!acc.is_zero()) out.set({i}, std::move(acc));
  }
  return out;
}

Tensor algebraic_bracket(const Tensor& t, const Tensor& x, const Tensor& y) {
  int n = t.dim();
  Tensor out(n, 1, 0);
  for (int i = 0; i < n; ++i) {
    Poly acc(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) acc += t.at({i, a, b}) * x.at({a}) * y.at({b});
    if (!acc.is_zero()) out.set({i}, std::move(acc));
  }
  return out;
}

Tensor jacobi_form(const Tensor& t) {
  int n = t.dim();
  Tensor j(n, 1, 3, 3);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) {
          Poly acc(n);
          for (int a = 0; a < n; ++a) {
            acc += t.at({i, r, a}) * t.at({a, b, k});
            acc += t.at({i, k, a}) * t.at({a, r, b});
            acc += t.at({i, b, a}) * t.at({a, k, r});
          }
          if (!acc.is_zero()) j.set({i, r, b, k}, std::move(acc));
        }
  return j;
}

namespace {

void require_vector_form(const Tensor& omega) {
  if (omega.upper() != 1 || omega.antisym_tail() != omega.lower())
    throw std::invalid_argument("expected a (1,k) form with full lower antisymmetry");
  if (!omega.verify_antisym())
    throw std::invalid_argument("form is not antisymmetric in its lower indices");
}

}  // namespace

Tensor d_hat(const Connection& c, const Tensor& omega) {
  require_vector_form(omega);
  int n = c.dim();
  int k = omega.lower();
  const Tensor& g = c.gamma();
  Tensor inner(n, 1, k + 1, k);
  inner.for_each_index([&](const TIndex& idx) {
    // idx = (i, r, j1..jk)
    int i = idx[0], r = idx[1];
    TIndex base{i};
    base.insert(base.end(), idx.begin() + 2, idx.end());
    Poly acc = omega.at(base).diff(r + 1);
    for (int a = 0; a < n; ++a) {
      TIndex sub = base;
      sub[0] = a;
      acc -= g.at({i, a, r}) * omega.at(sub);
    }
    if (!acc.is_zero()) inner.set(idx, std::move(acc));
  });
  return alternate_first_unchecked(inner);
}

Tensor box_nabla(const Connection& c, const Tensor& omega) {
  require_vector_form(omega);
  Tensor nab = nabla_tilde(c, omega);  // (1, k+1), derivative slot first
  Tensor reshaped(c.dim(), 1, omega.lower() + 1, omega.lower());
  for (const auto& [idx, p] : nab.components()) reshaped.set(idx, p);
  return alternate_first_unchecked(reshaped);
}

LocalLieVerdict is_local_lie_group(const Connection& c) {
  LocalLieVerdict v;
  v.tilde_flat = curvature_tilde(c).is_zero();
  v.hat_flat = curvature_hat(c).is_zero();
  v.nabla_torsion_zero = nabla_tilde(c, torsion(c)).is_zero();
  return v;
}

Tensor invariant_jet(const Connection& c, const Tensor& value_at_p,
                     const QVec& p, int order) {
  int n = c.dim();
  if (order < 0) throw std::invalid_argument("jet order must be non-negative");
  for (const auto& [idx, poly] : value_at_p.components())
    if (poly.degree() > 0)
      throw std::invalid_argument("invariant extension seed must be a constant tensor");
  // Work at the origin of shifted coordinates u = x - p.
  int r = value_at_p.upper(), s = value_at_p.lower();
  Tensor gs(n, 1, 2);
  for (const auto& [idx, poly] : c.gamma().components()) gs.set(idx, poly.shifted(p));

  Tensor xi = value_at_p;
  for (int m = 0; m < order; ++m) {
    // Solved parallel-transport equation: the partial derivative in direction
    // l equals +gamma-upper corrections minus gamma-lower corrections.
    Tensor step(n, r, s);
    Tensor homog(n, r, s);
    homog.for_each_index([&](const TIndex& idx) {
      Poly acc(n);
      for (int l = 0; l < n; ++l) {
        Poly rhs(n);
        for (int q = 0; q < r; ++q)
          for (int a = 0; a < n; ++a) {
            TIndex sub(idx);
            sub[q] = a;
            rhs += gs.at({idx[q], l, a}) * xi.at(sub);
          }
        for (int q = 0; q < s; ++q)
          for (int a = 0; a < n; ++a) {
            TIndex sub(idx);
            sub[r + q] = a;
            rhs -= gs.at({a, l, idx[r + q]}) * xi.at(sub);
          }
        acc += Poly::variable(n, l + 1) * rhs.homogeneous_part(m);
      }
      acc = acc.scaled(Rational(1, m + 1));
      if (!acc.is_zero()) homog.set(idx, std::move(acc));
    });
    xi = xi + homog;
  }
  // Shift back to the original coordinates.
  QVec mp(p.size());
  for (size_t i = 0; i < p.size(); ++i) mp[i] = -p[i];
  Tensor out(n, r, s, value_at_p.antisym_tail());
  for (const auto& [idx, poly] : xi.components()) out.set(idx, poly.shifted(mp));
  return out;
}

Tensor invariant_extension(const Frame& f, const Tensor& value_at_p, const QVec& p) {
  int n = f.dim();
  int r = value_at_p.upper(), s = value_at_p.lower();
  QMat wp = f.eval_w(p);
  QMat ep = f.eval_e(p);
  // up(x) = e(x) * w(p), lo(x) = e(p) * w(x), both polynomial matrices.
  PolyMat up(n, PolyVec(n, Poly(n))), lo(n, PolyVec(n, Poly(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < n; ++a) {
        up[i][j] += f.e()[i][a].scaled(wp[a][j]);
        lo[i][j] += f.w()[a][j].scaled(ep[i][a]);
      }
    }
  Tensor out(n, r, s, value_at_p.antisym_tail());
  out.for_each_index([&](const TIndex& oidx) {
    Poly acc(n);
    for (const auto& [sidx, val] : value_at_p.components()) {
      Poly term = val;
      for (int q = 0; q < r; ++q) term = term * up[oidx[q]][sidx[q]];
      for (int q = 0; q < s; ++q) term = term * lo[sidx[r + q]][oidx[r + q]];
      acc += term;
    }
    if (!acc.is_zero()) out.set(oidx, std::move(acc));
  });
  return out;
}

StructureConstants localize(const Tensor& t, const QVec& p) {
  int n = t.dim();
  std::map<std::array<int, 3>, Rational> c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational v = t.at({i, j, k}).eval(p);
        if (v != 0) c[{i, j, k}] = v;
      }
  return StructureConstants(n, std::move(c));
}

}  // namespace llg
