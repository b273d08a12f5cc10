#pragma once

#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Unordered pair of crossings whose passes, read from a basepoint, come in
// the order Over(a), Under(b), Under(a), Over(b).
struct SkewPair {
  CrossingId a = 0;
  CrossingId b = 0;
  int sign = 1;  // product of the two crossing signs
  friend bool operator==(const SkewPair&, const SkewPair&) = default;
};

enum class Direction { Along, Against };

// Knot diagrams only (NotAKnot otherwise). Sorted by (min id, max id).
std::vector<SkewPair> skew_pairs(const Diagram& d, Basepoint p, Direction dir = Direction::Along);

int arf(const Diagram& d);
int arf(const Diagram& d, Basepoint p);
int casson(const Diagram& d);
int casson(const Diagram& d, Basepoint p);

}  // namespace knots
