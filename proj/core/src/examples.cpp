#include <llg/examples.hpp>

namespace llg {

namespace {

Poly c1(int n, int v) { return Poly::constant(n, v); }

}  // namespace

Frame abelian_frame(int n) {
  return Frame(poly_mat_identity(n), poly_mat_identity(n));
}

Frame heisenberg_frame() {
  int n = 3;
  PolyMat e = poly_mat_identity(n);
  e[2][1] = Poly::variable(n, 1);
  PolyMat w = poly_mat_identity(n);
  w[2][1] = -Poly::variable(n, 1);
  return Frame(std::move(e), std::move(w));
}

Frame engel_frame() {
  int n = 4;
  Poly x1 = Poly::variable(n, 1);
  PolyMat e = poly_mat_identity(n);
  e[2][1] = x1;
  e[3][1] = (x1 * x1).scaled(Rational(1, 2));
  e[3][2] = x1;
  PolyMat w = poly_mat_identity(n);
  w[2][1] = -x1;
  w[3][1] = (x1 * x1).scaled(Rational(1, 2));
  w[3][2] = -x1;
  return Frame(std::move(e), std::move(w));
}

Frame nonflat_frame() {
  int n = 3;
  Poly x1 = Poly::variable(n, 1);
  PolyMat e = poly_mat_identity(n);
  e[2][1] = (x1 * x1).scaled(Rational(1, 2));
  PolyMat w = poly_mat_identity(n);
  w[2][1] = -e[2][1];
  return Frame(std::move(e), std::move(w));
}

StructureConstants heisenberg_constants() {
  return StructureConstants::from_sparse(3, {{2, 0, 1, Rational(1)}});
}

StructureConstants engel_constants() {
  return StructureConstants::from_sparse(
      4, {{2, 0, 1, Rational(1)}, {3, 0, 2, Rational(1)}});
}

StructureConstants aff1_constants() {
  return StructureConstants::from_sparse(2, {{1, 0, 1, Rational(1)}});
}

StructureConstants sl2_constants() {
  return StructureConstants::from_sparse(
      3, {{1, 0, 1, Rational(2)}, {2, 0, 2, Rational(-2)}, {0, 1, 2, Rational(1)}});
}

StructureConstants abelian_constants(int n) {
  return StructureConstants::from_sparse(n, {});
}

const std::vector<ExampleEntry>& builtin_examples() {
  static const std::vector<ExampleEntry> entries = [] {
    std::vector<ExampleEntry> out;
    auto add_frame = [&](std::string name, Frame f) {
      ExampleEntry e{std::move(name), ExampleKind::kFrame, std::move(f),
                     std::nullopt, std::nullopt, ""};
      out.push_back(std::move(e));
    };
    auto add_constants = [&](std::string name, StructureConstants c) {
      ExampleEntry e{std::move(name), ExampleKind::kConstants, std::nullopt,
                     std::move(c), std::nullopt, ""};
      out.push_back(std::move(e));
    };
    auto add_jet = [&](std::string name, GaugeJet j, std::string base) {
      ExampleEntry e{std::move(name), ExampleKind::kJet, std::nullopt,
                     std::nullopt, std::move(j), std::move(base)};
      out.push_back(std::move(e));
    };

    add_frame("abelian-2", abelian_frame(2));
    add_frame("abelian-3", abelian_frame(3));
    add_frame("heisenberg-3", heisenberg_frame());
    add_frame("engel-4", engel_frame());
    add_frame("nonflat-3", nonflat_frame());
    add_constants("aff1-2", aff1_constants());
    add_constants("sl2-3", sl2_constants());

    {
      // constant gauge direction on the abelian plane
      PolyMat a = poly_mat_zero(2);
      a[0][1] = c1(2, 1);
      add_jet("abelian-2-jet-constant", GaugeJet::linear(2, 4, a), "abelian-2");
    }
    {
      // f = id + t B with B12 = x1: a deformation that is not constant
      PolyMat b = poly_mat_zero(2);
      b[0][1] = Poly::variable(2, 1);
      add_jet("abelian-2-jet-shear", GaugeJet::linear(2, 4, b), "abelian-2");
    }
    {
      // scales the center direction: valid but fails the velocity check
      PolyMat a = poly_mat_zero(3);
      a[2][2] = c1(3, 1);
      add_jet("heisenberg-3-jet-center-scale", GaugeJet::linear(3, 4, a),
              "heisenberg-3");
    }
    {
      // nonzero third column: velocity check fails on the derived algebra
      PolyMat a = poly_mat_zero(3);
      a[1][2] = c1(3, 1);
      add_jet("heisenberg-3-jet-bad-column", GaugeJet::linear(3, 4, a),
              "heisenberg-3");
    }
    {
      // stays inside the constancy pattern: first row untouched
      PolyMat a = poly_mat_zero(3);
      a[1][0] = c1(3, 1);
      a[2][1] = c1(3, -1);
      add_jet("heisenberg-3-jet-constant", GaugeJet::linear(3, 4, a),
              "heisenberg-3");
    }
    return out;
  }();
  return entries;
}

const ExampleEntry* find_example(const std::string& name) {
  for (const auto& e : builtin_examples())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace llg
