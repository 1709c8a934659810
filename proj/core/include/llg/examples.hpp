#pragma once

#include <llg/deformation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace llg {

enum class ExampleKind { kFrame, kConstants, kJet };

struct ExampleEntry {
  std::string name;
  ExampleKind kind;
  std::optional<Frame> frame;
  std::optional<StructureConstants> constants;
  std::optional<GaugeJet> jet;
  // Base algebra for jet examples.
  std::string base;
};

// Built-in example library: nilpotent frames, classical structure constants
// and a handful of reference gauge jets.
const std::vector<ExampleEntry>& builtin_examples();
const ExampleEntry* find_example(const std::string& name);

// Convenience accessors used across the test suites.
Frame abelian_frame(int n);
Frame heisenberg_frame();   // n=3, single shear in the third direction
Frame engel_frame();        // n=4, quadratic shear tower
Frame nonflat_frame();      // n=3, quadratic shear: fails the flatness test
StructureConstants heisenberg_constants();
StructureConstants engel_constants();
StructureConstants aff1_constants();
StructureConstants sl2_constants();
StructureConstants abelian_constants(int n);

}  // namespace llg
