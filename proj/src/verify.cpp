#include "lightcolor/verify.hpp"

#include <string>

namespace lightcolor {

VerifyReport verify_coloring(const Instance& inst, const Coloring& c) {
  if (c.size() != inst.size()) {
    throw InvalidInput("coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(inst.size()) +
                       " subtrees");
  }
  if (!c.total()) throw InvalidInput("coloring is partial");

  VerifyReport report;
  for (auto [u, v] : inst.tree().edges) {
    const Edge e = Edge::of(u, v);
    for (Arc arc : {e.forward(), e.backward()}) {
      std::span<const SubtreeId> ids = inst.on_arc(arc);
      for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
          if (c[ids[a]] == c[ids[b]]) report.violations.push_back({arc, ids[a], ids[b]});
        }
      }
    }
  }
  return report;
}

}  // namespace lightcolor
