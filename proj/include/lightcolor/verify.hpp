#pragma once

#include <cstddef>
#include <vector>

#include "lightcolor/instance.hpp"

namespace lightcolor {

struct ColorClash {
  Arc arc;
  SubtreeId first = 0;
  SubtreeId second = 0;
  friend bool operator==(const ColorClash&, const ColorClash&) = default;
};

struct VerifyReport {
  std::vector<ColorClash> violations;
  bool ok() const { return violations.empty(); }
};

/// A coloring is valid iff the subtrees on every directed edge have pairwise
/// distinct colors. Arcs are checked in tree edge order, (min,max) first.
/// Throws InvalidInput unless `c` is total over the instance's subtrees.
VerifyReport verify_coloring(const Instance& inst, const Coloring& c);

}  // namespace lightcolor
