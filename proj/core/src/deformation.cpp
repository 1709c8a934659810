#include <llg/deformation.hpp>

#include <stdexcept>

namespace llg {

namespace {

Tensor zero12(int n) { return Tensor(n, 1, 2); }

PolyMat mat_scaled(const PolyMat& m, const Rational& c) {
  PolyMat r = m;
  for (auto& row : r)
    for (auto& p : row) p = p.scaled(c);
  return r;
}

}  // namespace

GaugeJet::GaugeJet(MatJet f) : n_(static_cast<int>(f.coeff(0).size())), f_(std::move(f)) {
  if (!poly_mat_is_identity(f_.coeff(0)))
    throw std::invalid_argument("gauge jet must start at the identity");
  g_ = tjet_invert(f_);
  MatJet prod = f_ * g_;
  MatJet prod2 = g_ * f_;
  for (int m = 0; m <= f_.order(); ++m) {
    PolyMat want = m == 0 ? poly_mat_identity(n_) : poly_mat_zero(n_);
    if (!carrier_is_zero(carrier_sub(prod.coeff(m), want)) ||
        !carrier_is_zero(carrier_sub(prod2.coeff(m), want)))
      throw std::logic_error("gauge jet inverse verification failed");
  }
}

GaugeJet GaugeJet::identity(int n, int order) {
  std::vector<PolyMat> c(order + 1, poly_mat_zero(n));
  c[0] = poly_mat_identity(n);
  return GaugeJet(MatJet(std::move(c)));
}

GaugeJet GaugeJet::linear(int n, int order, const PolyMat& a) {
  std::vector<PolyMat> c(order + 1, poly_mat_zero(n));
  c[0] = poly_mat_identity(n);
  if (order >= 1) c[1] = a;
  return GaugeJet(MatJet(std::move(c)));
}

GaugeJet GaugeJet::exponential(int n, int order, const PolyMat& a) {
  std::vector<PolyMat> c(order + 1, poly_mat_zero(n));
  c[0] = poly_mat_identity(n);
  PolyMat power = poly_mat_identity(n);
  Rational fact = 1;
  for (int m = 1; m <= order; ++m) {
    power = poly_mat_mul(power, a);
    fact /= m;
    c[m] = mat_scaled(power, fact);
  }
  return GaugeJet(MatJet(std::move(c)));
}

TensorJet act_on_connection(const GaugeJet& j, const Connection& c) {
  int n = c.dim();
  int K = j.order();
  if (n != j.dim()) throw std::invalid_argument("gauge jet / connection dimension mismatch");
  const Tensor& g0 = c.gamma();
  std::vector<Tensor> out(K + 1, zero12(n));
  for (int m = 0; m <= K; ++m) {
    Tensor gm(n, 1, 2);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int jj = 0; jj < n; ++jj) {
          Poly acc(n);
          for (int q = 0; q <= m; ++q) {
            const PolyMat& fq = j.f().coeff(q);
            const PolyMat& gr = j.g().coeff(m - q);
            for (int a = 0; a < n; ++a) acc += fq[i][a].diff(k + 1) * gr[a][jj];
            for (int b = 0; b < n; ++b)
              for (int cc = 0; cc < n; ++cc) {
                const Poly& gam = g0.at({b, k, cc});
                if (gam.is_zero()) continue;
                acc += fq[i][b] * gam * gr[cc][jj];
              }
          }
          if (!acc.is_zero()) gm.set({i, k, jj}, std::move(acc));
        }
    out[m] = std::move(gm);
  }
  return TensorJet(std::move(out));
}

TensorJet torsion_jet(const TensorJet& gamma_t) {
  int n = gamma_t.coeff(0).dim();
  std::vector<Tensor> out;
  for (int m = 0; m <= gamma_t.order(); ++m) {
    Tensor t(n, 1, 2, 2);
    const Tensor& g = gamma_t.coeff(m);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Poly v = g.at({i, a, b}) - g.at({i, b, a});
          if (!v.is_zero()) t.set({i, a, b}, std::move(v));
        }
    out.push_back(std::move(t));
  }
  return TensorJet(std::move(out));
}

namespace {

TensorJet curvature_jet_impl(const TensorJet& gamma_t, bool hat) {
  int n = gamma_t.coeff(0).dim();
  int K = gamma_t.order();
  std::vector<Tensor> out;
  for (int m = 0; m <= K; ++m) {
    Tensor r(n, 1, 3);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int k = 0; k < n; ++k) {
            Poly acc(n);
            const Tensor& gm = gamma_t.coeff(m);
            if (hat)
              acc = gm.at({i, k, b}).diff(a + 1) - gm.at({i, k, a}).diff(b + 1);
            else
              acc = gm.at({i, b, k}).diff(a + 1) - gm.at({i, a, k}).diff(b + 1);
            for (int q = 0; q <= m; ++q) {
              const Tensor& gq = gamma_t.coeff(q);
              const Tensor& gr = gamma_t.coeff(m - q);
              for (int u = 0; u < n; ++u) {
                if (hat) {
                  acc += gq.at({u, k, a}) * gr.at({i, u, b});
                  acc -= gq.at({u, k, b}) * gr.at({i, u, a});
                } else {
                  acc += gq.at({u, a, k}) * gr.at({i, b, u});
                  acc -= gq.at({u, b, k}) * gr.at({i, a, u});
                }
              }
            }
            if (!acc.is_zero()) r.set({i, a, b, k}, std::move(acc));
          }
    out.push_back(std::move(r));
  }
  return TensorJet(std::move(out));
}

}  // namespace

TensorJet curvature_hat_jet(const TensorJet& gamma_t) {
  return curvature_jet_impl(gamma_t, true);
}

TensorJet curvature_tilde_jet(const TensorJet& gamma_t) {
  return curvature_jet_impl(gamma_t, false);
}

TensorJet nabla_tilde_jet(const TensorJet& gamma_t, const TensorJet& xi) {
  int n = gamma_t.coeff(0).dim();
  int K = xi.order();
  int r = xi.coeff(0).upper(), s = xi.coeff(0).lower();
  std::vector<Tensor> out;
  for (int m = 0; m <= K; ++m) {
    Tensor res(n, r, s + 1);
    res.for_each_index([&](const TIndex& oidx) {
      int l = oidx[r];
      TIndex base(oidx.begin(), oidx.begin() + r);
      base.insert(base.end(), oidx.begin() + r + 1, oidx.end());
      Poly acc = xi.coeff(m).at(base).diff(l + 1);
      for (int q = 0; q <= m; ++q) {
        const Tensor& g = gamma_t.coeff(q);
        const Tensor& x = xi.coeff(m - q);
        for (int u = 0; u < r; ++u)
          for (int a = 0; a < n; ++a) {
            TIndex sub = base;
            sub[u] = a;
            acc -= g.at({base[u], l, a}) * x.at(sub);
          }
        for (int u = 0; u < s; ++u)
          for (int a = 0; a < n; ++a) {
            TIndex sub = base;
            sub[r + u] = a;
            acc += g.at({a, l, base[r + u]}) * x.at(sub);
          }
      }
      if (!acc.is_zero()) res.set(oidx, std::move(acc));
    });
    out.push_back(std::move(res));
  }
  return TensorJet(std::move(out));
}

std::vector<QMat> act_on_splitting(const GaugeJet& j, const Frame& fr,
                                   const QVec& x, const QVec& y) {
  int n = fr.dim();
  QMat eps = splitting_eval(fr, x, y);
  int K = j.order();
  std::vector<QMat> out(K + 1, QMat(n, QVec(n, Rational(0))));
  for (int m = 0; m <= K; ++m) {
    for (int q = 0; q <= m; ++q) {
      // f_q evaluated at y, g_{m-q} at x
      QMat fy(n, QVec(n)), gx(n, QVec(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          fy[a][b] = j.f().coeff(q)[a][b].eval(y);
          gx[a][b] = j.g().coeff(m - q)[a][b].eval(x);
        }
      QMat term = mat_mul(mat_mul(fy, eps), gx);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[m][a][b] += term[a][b];
    }
  }
  return out;
}

PolyMat gauge_between(const Frame& f0, const Frame& f1, const QVec& p) {
  int n = f0.dim();
  if (f1.dim() != n) throw std::invalid_argument("frame dimension mismatch");
  QMat mid = mat_mul(f0.eval_w(p), f1.eval_e(p));
  PolyMat out(n, PolyVec(n, Poly(n)));
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      Poly acc(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          acc += f0.e()[i][a].scaled(mid[a][b]) * f1.w()[b][jj];
      out[i][jj] = std::move(acc);
    }
  return out;
}

ValidityReport validity(const GaugeJet& j, const Connection& c, const QVec& p) {
  if (!curvature_hat(c).is_zero())
    throw NotLocalLieError("validity analysis requires a hat-flat base connection");
  int K = j.order();
  TensorJet gt = act_on_connection(j, c);
  TensorJet rh = curvature_hat_jet(gt);
  TensorJet rt = curvature_tilde_jet(gt);
  ValidityReport rep;
  int first_bad = rh.first_nonzero_order();
  rep.validity_order = first_bad < 0 ? K : first_bad - 1;
  rep.tilde_flat_all_orders = rt.is_zero();

  Tensor T0 = torsion(c);
  auto derived = derived_algebra(localize(T0, p));
  int n = c.dim();
  for (int m = 1; m <= K; ++m) {
    const PolyMat& fm = j.coeff(m);
    bool annihilates = true;
    for (int i = 0; i < n && annihilates; ++i)
      for (int kk = 0; kk < n && annihilates; ++kk)
        for (int jj = 0; jj < n && annihilates; ++jj) {
          Poly acc(n);
          for (int a = 0; a < n; ++a) acc += fm[i][a] * T0.at({a, kk, jj});
          if (!acc.is_zero()) annihilates = false;
        }
    rep.velocity_annihilates_torsion.push_back(annihilates);

    bool kills = true;
    for (const auto& v : derived) {
      for (int i = 0; i < n && kills; ++i) {
        Poly acc(n);
        for (int a = 0; a < n; ++a) acc += fm[i][a].scaled(v[a]);
        if (!acc.is_zero()) kills = false;
      }
    }
    rep.velocity_kills_derived.push_back(kills);
  }
  return rep;
}

TensorJet constancy_defect(const GaugeJet& j, const Connection& c) {
  int n = c.dim();
  int K = j.order();
  Tensor T0 = torsion(c);
  TensorJet Tt = torsion_jet(act_on_connection(j, c));
  std::vector<Tensor> out;
  for (int m = 0; m <= K; ++m) {
    Tensor d(n, 1, 2, 2);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Poly acc(n);
          for (int u = 0; u < n; ++u) acc += j.coeff(m)[i][u] * T0.at({u, a, b});
          for (int q = 0; q <= m; ++q)
            for (int r = 0; r + q <= m; ++r) {
              int s = m - q - r;
              const Tensor& tq = Tt.coeff(q);
              for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                  const Poly& tv = tq.at({i, u, v});
                  if (tv.is_zero()) continue;
                  acc -= tv * j.f().coeff(r)[u][a] * j.f().coeff(s)[v][b];
                }
            }
          if (!acc.is_zero()) d.set({i, a, b}, std::move(acc));
        }
    out.push_back(std::move(d));
  }
  return TensorJet(std::move(out));
}

int constancy_order(const TensorJet& delta) {
  int bad = delta.first_nonzero_order();
  return bad < 0 ? delta.order() : bad - 1;
}

KappaReport kappa(const GaugeJet& j, const Connection& c) {
  int n = c.dim();
  int K = j.order();
  KappaReport rep;

  TensorJet gt = act_on_connection(j, c);
  TensorJet Tt = torsion_jet(gt);
  Tensor T0 = torsion(c);
  {
    std::vector<Tensor> lit;
    for (int m = 0; m <= K; ++m)
      lit.push_back(m == 0 ? Tt.coeff(0) - T0 : Tt.coeff(m));
    rep.literal = TensorJet(std::move(lit));
  }
  TensorJet delta = constancy_defect(j, c);
  {
    std::vector<Tensor> conj(K + 1, Tensor(n, 1, 2, 2));
    for (int m = 0; m <= K; ++m) {
      Tensor acc(n, 1, 2, 2);
      for (int q = 0; q <= m; ++q) {
        const PolyMat& gq = j.g().coeff(q);
        const Tensor& dm = delta.coeff(m - q);
        for (int i = 0; i < n; ++i)
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              Poly v(n);
              for (int u = 0; u < n; ++u) v += gq[i][u] * dm.at({u, a, b});
              if (!v.is_zero()) acc.add({i, a, b}, -v);
            }
      }
      conj[m] = std::move(acc);
    }
    rep.conjugated = TensorJet(std::move(conj));
  }
  if (K >= 1) {
    TensorJet kdot = rep.conjugated.dt();  // order K-1
    TensorJet gt_trunc = gt.truncated(K - 1);
    TensorJet nt = nabla_tilde_jet(gt_trunc, kdot);
    TensorJet g0jet = TensorJet::constant(c.gamma(), K - 1);
    TensorJet n0 = nabla_tilde_jet(g0jet, kdot);
    for (int m = 0; m <= K - 1; ++m) {
      rep.derivative_parallel_t.push_back(nt.coeff(m).is_zero());
      rep.derivative_parallel_0.push_back(n0.coeff(m).is_zero());
    }
  }
  return rep;
}

Prop17Report prop17_report(const GaugeJet& j, const Connection& c, const QVec& p) {
  TensorJet delta = constancy_defect(j, c);
  KappaReport kap = kappa(j, c);
  Prop17Report rep;
  rep.constant = delta.is_zero();
  rep.kappa_zero = kap.conjugated.is_zero();

  auto zero_at_p = [&](const TensorJet& jet) {
    for (int m = 0; m <= jet.order(); ++m)
      for (const auto& [idx, poly] : jet.coeff(m).components())
        if (poly.eval(p) != 0) return m;
    return -1;
  };
  int iii = zero_at_p(kap.conjugated);
  rep.kappa_zero_at_p = iii < 0;
  TensorJet kdot = kap.conjugated.dt();
  rep.derivative_zero = kdot.is_zero();
  int v = zero_at_p(kdot);
  rep.derivative_zero_at_p = v < 0;
  rep.first_failure_order = kap.conjugated.first_nonzero_order();
  rep.derivative_first_failure = kdot.first_nonzero_order();
  return rep;
}

RigidityReport semisimple_rigidity(const GaugeJet& j, const StructureConstants& g) {
  RigidityReport rep;
  auto derived = derived_algebra(g);
  int n = g.dim();
  rep.derived_is_whole = static_cast<int>(derived.size()) == n;
  for (int m = 1; m <= j.order(); ++m) {
    const PolyMat& fm = j.coeff(m);
    bool kills = true;
    for (const auto& vb : derived)
      for (int i = 0; i < n && kills; ++i) {
        Poly acc(n);
        for (int a = 0; a < n; ++a) acc += fm[i][a].scaled(vb[a]);
        if (!acc.is_zero()) kills = false;
      }
    if (!kills) {
      rep.first_violating_order = m;
      break;
    }
  }
  return rep;
}

KsCocycle ks_cocycle(const GaugeJet& j, const Connection& c) {
  TensorJet delta = constancy_defect(j, c);
  if (constancy_order(delta) < 1)
    throw std::invalid_argument(
        "the velocity cocycle needs constancy through order one");
  int n = c.dim();
  KsCocycle out;
  out.mu = j.coeff(1);
  Tensor mu_form(n, 1, 1, 1);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      if (!out.mu[i][a].is_zero()) mu_form.set({i, a}, out.mu[i][a]);
  out.dhat_mu = d_hat(c, mu_form);
  out.nabla_mu = nabla_tilde(c, mu_form);
  out.is_cocycle = out.dhat_mu.is_zero();
  out.is_invariant = out.nabla_mu.is_zero();
  return out;
}

KsClass ks_class(const PolyMat& mu, const StructureConstants& g, const QVec& p,
                 const Connection& c) {
  int n = g.dim();
  Tensor mu_form(n, 1, 1, 1);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      if (!mu[i][a].is_zero()) mu_form.set({i, a}, mu[i][a]);
  KsClass out;
  if (!d_hat(c, mu_form).is_zero()) return out;  // not a cocycle
  out.defined = true;
  out.invariant = nabla_tilde(c, mu_form).is_zero();

  // Localize and express in the stored degree-1 basis.
  AlgebraicCochain mu_p(n, 1);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) mu_p.add({i, a}, mu[i][a].eval(p));
  CohomologyReport coh = cohomology(g, 1);
  const auto& reps = coh.by_degree[1].representatives;
  QMat D0 = differential_matrix(g, 0);
  int dom0 = AlgebraicCochain::space_dim(n, 0);
  int cod = AlgebraicCochain::space_dim(n, 1);
  // columns: representatives then the image generators
  QMat A(cod, QVec(reps.size() + dom0, Rational(0)));
  for (size_t r = 0; r < reps.size(); ++r) {
    QVec col = reps[r].coordinates();
    for (int i = 0; i < cod; ++i) A[i][r] = col[i];
  }
  for (int cix = 0; cix < dom0; ++cix)
    for (int i = 0; i < cod; ++i) A[i][reps.size() + cix] = D0[i][cix];
  auto sol = solve(A, mu_p.coordinates());
  if (!sol) throw std::logic_error("cocycle failed to decompose over kernel basis");
  out.coordinates.assign(sol->begin(), sol->begin() + reps.size());
  out.zero_class = is_zero(out.coordinates);
  if (out.zero_class) {
    QVec v(sol->begin() + reps.size(), sol->end());
    out.certificate = AlgebraicCochain::from_coordinates(n, 0, v);
  }
  return out;
}

std::vector<DiagramCheck> diagram_checks(const GaugeJet& j, const Frame& fr,
                                         uint64_t seed, int max_degree) {
  int n = fr.dim();
  int K = j.order();
  Connection c0 = Connection::from_frame(fr);
  TensorJet gt = act_on_connection(j, c0);
  Rng rng(seed);
  QVec origin(n, Rational(0));

  // jet pushforward of a (1,k) tensor: upper slot through f, lower through g
  auto push = [&](const Tensor& psi) {
    int k = psi.lower();
    std::vector<Tensor> out;
    for (int m = 0; m <= K; ++m) {
      Tensor res(n, 1, k, psi.antisym_tail());
      res.for_each_index([&](const TIndex& oidx) {
        Poly acc(n);
        // split m into q (for f) and parts for each g factor
        std::vector<int> split(k + 1, 0);
        for (;;) {
          int total = 0;
          for (int x : split) total += x;
          if (total == m) {
            for (const auto& [sidx, val] : psi.components()) {
              Poly term = val * j.f().coeff(split[0])[oidx[0]][sidx[0]];
              for (int q = 0; q < k; ++q)
                term = term * j.g().coeff(split[1 + q])[sidx[1 + q]][oidx[1 + q]];
              acc += term;
            }
          }
          int q = k;
          while (q >= 0) {
            if (++split[q] <= m) break;
            split[q] = 0;
            --q;
          }
          if (q < 0) break;
        }
        if (!acc.is_zero()) res.set(oidx, std::move(acc));
      });
      out.push_back(std::move(res));
    }
    return TensorJet(std::move(out));
  };

  // d-hat with the deformed connection, coefficientwise
  auto d_hat_jet = [&](const TensorJet& omega) {
    int k = omega.coeff(0).lower();
    std::vector<Tensor> out;
    for (int m = 0; m <= K; ++m) {
      Tensor inner(n, 1, k + 1, k);
      inner.for_each_index([&](const TIndex& idx) {
        int i = idx[0], r = idx[1];
        TIndex base{i};
        base.insert(base.end(), idx.begin() + 2, idx.end());
        Poly acc = omega.coeff(m).at(base).diff(r + 1);
        for (int q = 0; q <= m; ++q)
          for (int a = 0; a < n; ++a) {
            TIndex sub = base;
            sub[0] = a;
            acc -= gt.coeff(q).at({i, a, r}) * omega.coeff(m - q).at(sub);
          }
        if (!acc.is_zero()) inner.set(idx, std::move(acc));
      });
      out.push_back(alternate_first_unchecked(inner));
    }
    return TensorJet(std::move(out));
  };

  std::vector<DiagramCheck> checks;
  for (int k = 0; k <= max_degree; ++k) {
    // random constant seed cochain, extended invariantly through the frame
    Tensor seed_t(n, 1, k, k);
    AlgebraicCochain wp = random_cochain(rng, n, k);
    for (const auto& [idx, v] : wp.components()) {
      TIndex t(idx.begin(), idx.end());
      seed_t.set(t, Poly::constant(n, v));
    }
    Tensor omega = invariant_extension(fr, seed_t, origin);
    Tensor d0 = d_hat(c0, omega);
    TensorJet lhs = push(d0);
    TensorJet rhs = d_hat_jet(push(omega));
    checks.push_back({k, (lhs - rhs).is_zero()});
  }
  return checks;
}

GaugeJet family_jet(Rng& rng, const std::string& algebra, int n, int order,
                    bool constant) {
  std::vector<PolyMat> coeffs(order + 1, poly_mat_zero(n));
  coeffs[0] = poly_mat_identity(n);
  if (algebra == "heisenberg-3") {
    // every coordinate-constant jet is a deformation; constant ones keep the
    // (1,1) entry at one and the (1,3) entry at zero
    for (int m = 1; m <= order; ++m)
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
          int v = rng.uniform(-2, 2);
          if (constant && i == 0 && (jj == 0 || jj == 2)) v = 0;
          if (v != 0) coeffs[m][i][jj] = Poly::constant(n, v);
        }
    if (!constant) coeffs[1][0][0] = Poly::constant(n, rng.uniform(1, 2));
  } else if (algebra == "engel-4") {
    // coordinate-constant jets with zero first-row perturbation are constant
    // deformations; (1,1)/(1,2) entries stay valid but break constancy,
    // (1,3)/(1,4) entries break validity
    for (int m = 1; m <= order; ++m)
      for (int i = constant ? 1 : 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
          if (i == 0 && (jj == 2 || jj == 3)) continue;
          int v = rng.uniform(-1, 1);
          if (i == 0 && constant) v = 0;
          if (v != 0) coeffs[m][i][jj] = Poly::constant(n, v);
        }
    if (!constant) coeffs[1][0][0] = Poly::constant(n, 1);
  } else if (algebra.rfind("abelian", 0) == 0) {
    if (constant) {
      for (int m = 1; m <= order; ++m)
        for (int i = 0; i < n; ++i)
          for (int jj = 0; jj < n; ++jj) {
            int v = rng.uniform(-2, 2);
            if (v != 0) coeffs[m][i][jj] = Poly::constant(n, v);
          }
    } else {
      // strictly upper-triangular t-linear jet with linear entries
      for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj) {
          Poly p(n);
          for (int v = 1; v <= n; ++v) {
            int cc = rng.uniform(-1, 1);
            if (cc != 0) p += Poly::variable(n, v).scaled(Rational(cc));
          }
          if (p.is_zero()) p = Poly::variable(n, 1);
          coeffs[1][i][jj] = p;
        }
    }
  } else if (algebra == "sl2-3") {
    // only the identity is admissible; callers exercise rejection with
    // random_jet
  } else {
    throw std::invalid_argument("unknown jet family: " + algebra);
  }
  return GaugeJet(MatJet(std::move(coeffs)));
}

GaugeJet random_jet(Rng& rng, int n, int order, int max_degree) {
  std::vector<PolyMat> coeffs(order + 1, poly_mat_zero(n));
  coeffs[0] = poly_mat_identity(n);
  for (int m = 1; m <= order; ++m)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        if (rng.uniform(1, 100) <= 40) coeffs[m][i][jj] = random_poly(rng, n, max_degree, 40);
  return GaugeJet(MatJet(std::move(coeffs)));
}

}  // namespace llg
