#pragma once

#include <cstdint>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

struct CrossingArcs {
  CrossingId crossing = 0;
  int over = 0;
  int under_in = 0;
  int under_out = 0;
};

// Arcs run from one undercrossing to the next; a component without
// undercrossings (free loops included) is a single arc.
struct ArcSet {
  int count = 0;
  // arc_of[c][i]: arc carrying pass i of component c (for an Under pass, the
  // arc leaving it).
  std::vector<std::vector<int>> arc_of;
  std::vector<int> free_loop_arc;  // by component, -1 unless a free loop
  std::vector<CrossingArcs> relations;  // by crossing id - 1
};

ArcSet arcs(const Diagram& d);

// Fox colorings mod p: 2 * over = under_in + under_out at every crossing.
// `total` counts all solutions (p^dimension), `proper` the non-constant ones.
struct ColoringCount {
  int p = 3;
  int dimension = 0;
  std::uint64_t total = 0;
  std::uint64_t proper = 0;
};

// p must be an odd prime (std::invalid_argument otherwise).
ColoringCount count_colorings(const Diagram& d, int p);
bool is_colorable(const Diagram& d, int p);

}  // namespace knots
