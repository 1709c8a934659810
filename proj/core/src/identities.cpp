#include <llg/identities.hpp>

#include <sstream>

namespace llg {

namespace {

std::string first_witness(const Tensor& t) {
  if (t.is_zero()) return {};
  const auto& [idx, p] = *t.components().begin();
  std::ostringstream os;
  os << "component (";
  for (size_t q = 0; q < idx.size(); ++q) os << (q ? "," : "") << idx[q] + 1;
  os << ") = " << p.str();
  return os.str();
}

void push(IdentityReport& rep, std::string name, const Tensor& defect) {
  rep.results.push_back({std::move(name), defect.is_zero(), first_witness(defect)});
}

// R(i,a,b,c) + R(i,b,c,a) + R(i,c,a,b)
Poly cyclic_curv(const Tensor& R, int i, int a, int b, int c) {
  return R.at({i, a, b, c}) + R.at({i, b, c, a}) + R.at({i, c, a, b});
}

Tensor t_pair(const Tensor& T, const Tensor& x, const Tensor& y) {
  return algebraic_bracket(T, x, y);
}

}  // namespace

IdentityReport run_identity_suite(const Connection& c, uint64_t seed, const Frame* frame) {
  IdentityReport rep;
  int n = c.dim();
  Rng rng(seed);

  const Tensor T = torsion(c);
  const Tensor Rt = curvature_tilde(c);
  const Tensor Rh = curvature_hat(c);
  const Tensor NT = nabla_tilde(c, T);  // (i, l, j, k) = derivative l of T(i,j,k)
  const Tensor J = jacobi_form(T);

  // Sampled polynomial fields.
  const Tensor X = vector_field(n, random_vector_field(rng, n, 2));
  const Tensor Y = vector_field(n, random_vector_field(rng, n, 2));
  const Tensor xi = vector_field(n, random_vector_field(rng, n, 2));

  const Tensor nabX_of_Y = nabla_tilde(c, Y);
  const Tensor nabX_of_X = nabla_tilde(c, X);
  const Tensor hatX_of_Y = nabla_hat(c, Y);
  const Tensor hatX_of_X = nabla_hat(c, X);
  const PolyVec Xv = vector_components(X);
  const PolyVec Yv = vector_components(Y);

  const Tensor tilde_XY = contract_direction(nabX_of_Y, Xv);
  const Tensor tilde_YX = contract_direction(nabX_of_X, Yv);
  const Tensor hat_XY = contract_direction(hatX_of_Y, Xv);
  const Tensor hat_YX = contract_direction(hatX_of_X, Yv);
  const Tensor br = lie_bracket_fields(X, Y);

  // Difference of the two covariant derivatives is a torsion contraction.
  push(rep, "nabla_difference", tilde_XY - hat_XY - t_pair(T, Y, X));
  // Skew combination produces the bracket plus a torsion term.
  push(rep, "nabla_skew_bracket", tilde_XY - tilde_YX - br - t_pair(T, Y, X));
  // Mixed combination is exactly the bracket.
  push(rep, "mixed_nabla_bracket", hat_XY - tilde_YX - br);
  // Symmetrized parts of the two derivatives agree.
  push(rep, "nabla_symmetric_sum", tilde_XY + tilde_YX - hat_XY - hat_YX);

  // Cyclic covariant derivative of torsion against the quadratic torsion
  // terms; the cyclic tilde-curvature correction closes it for raw gamma.
  {
    Tensor reshaped(n, 1, 3, 2);
    for (const auto& [idx, p] : NT.components()) reshaped.set(idx, p);
    Tensor lhs = alternate_first_unchecked(reshaped);
    Tensor defect(n, 1, 3);
    defect.for_each_index([&](const TIndex& id) {
      int i = id[0], r = id[1], k = id[2], j = id[3];
      Poly rhs(n);
      for (int a = 0; a < n; ++a) {
        rhs += T.at({a, r, k}) * T.at({i, a, j});
        rhs += T.at({a, j, r}) * T.at({i, a, k});
        rhs += T.at({a, k, j}) * T.at({i, a, r});
      }
      Poly v = lhs.at(id) - rhs - cyclic_curv(Rt, i, r, k, j);
      if (!v.is_zero()) defect.set(id, std::move(v));
    });
    push(rep, "cyclic_torsion_derivative", defect);
  }

  // Expansion of the curvature difference through torsion derivatives and
  // quadratic torsion terms, with twice the Jacobi form as correction.
  {
    Tensor defect(n, 1, 3);
    defect.for_each_index([&](const TIndex& id) {
      int i = id[0], r = id[1], j = id[2], k = id[3];
      Poly lhs = Rh.at(id) - Rt.at(id);
      Poly rhs = NT.at({i, r, k, j}) - NT.at({i, j, k, r});
      for (int a = 0; a < n; ++a) {
        rhs += T.at({i, a, j}) * T.at({a, r, k});
        rhs += T.at({i, a, r}) * T.at({a, k, j});
        rhs += T.at({i, a, k}) * T.at({a, j, r});
      }
      rhs -= J.at({i, r, j, k}).scaled(2);
      Poly v = lhs - rhs;
      if (!v.is_zero()) defect.set(id, std::move(v));
    });
    push(rep, "curvature_difference_expansion", defect);
  }

  // Hat curvature equals the covariant derivative of torsion, up to the
  // cyclic tilde-curvature correction.
  {
    Tensor defect(n, 1, 3);
    defect.for_each_index([&](const TIndex& id) {
      int i = id[0], r = id[1], j = id[2], k = id[3];
      Poly v = Rh.at(id) - NT.at({i, k, r, j}) - Rt.at(id) +
               cyclic_curv(Rt, i, r, j, k);
      if (!v.is_zero()) defect.set(id, std::move(v));
    });
    push(rep, "curvature_equals_torsion_derivative", defect);
  }

  // Cyclic hat curvature plus cyclic tilde curvature plus the Jacobi form.
  {
    Tensor defect(n, 1, 3);
    defect.for_each_index([&](const TIndex& id) {
      int i = id[0], r = id[1], j = id[2], k = id[3];
      Poly v = cyclic_curv(Rh, i, r, j, k) + cyclic_curv(Rt, i, r, j, k) +
               J.at(id);
      if (!v.is_zero()) defect.set(id, std::move(v));
    });
    push(rep, "cyclic_curvature_jacobi", defect);
  }

  // Second covariant derivatives commute up to a torsion contraction and a
  // tilde-curvature term.
  {
    const Tensor N1 = nabla_tilde(c, xi);        // (i, j)
    const Tensor N2 = nabla_tilde(c, N1);        // (i, k, j)
    Tensor defect(n, 1, 2);
    defect.for_each_index([&](const TIndex& id) {
      int i = id[0], k = id[1], j = id[2];
      Poly v = N2.at({i, k, j}) - N2.at({i, j, k});
      for (int a = 0; a < n; ++a) {
        v -= T.at({a, k, j}) * N1.at({i, a});
        v += Rt.at({i, k, j, a}) * xi.at({a});
      }
      if (!v.is_zero()) defect.set(id, std::move(v));
    });
    push(rep, "nabla_commutator_torsion", defect);
  }

  if (frame != nullptr) {
    // Frame columns are parallel, so the covariant derivative of their
    // bracket is a hat-curvature contraction.
    bool columns_parallel = true;
    for (int a = 0; a < n; ++a) {
      Tensor col = vector_field(n, frame->column(a));
      if (!nabla_tilde(c, col).is_zero()) columns_parallel = false;
    }
    rep.results.push_back({"frame_columns_parallel", columns_parallel, ""});
    bool bracket_ok = true;
    std::string witness;
    for (int a = 0; a < n && bracket_ok; ++a) {
      for (int b = 0; b < n && bracket_ok; ++b) {
        Tensor Xc = vector_field(n, frame->column(a));
        Tensor Yc = vector_field(n, frame->column(b));
        Tensor nbr = nabla_tilde(c, lie_bracket_fields(Xc, Yc));  // (i, z)
        Tensor local(n, 1, 1);
        local.for_each_index([&](const TIndex& id) {
          int i = id[0], z = id[1];
          Poly v = nbr.at({i, z});
          for (int r = 0; r < n; ++r)
            for (int j = 0; j < n; ++j)
              v -= Rh.at({i, r, j, z}) * Xc.at({r}) * Yc.at({j});
          if (!v.is_zero()) local.set(id, std::move(v));
        });
        if (!local.is_zero()) {
          bracket_ok = false;
          witness = "columns " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                    ": " + first_witness(local);
        }
      }
    }
    rep.results.push_back({"parallel_bracket_curvature", bracket_ok, witness});
  }

  return rep;
}

}  // namespace llg
