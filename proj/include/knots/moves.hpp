#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

enum class MoveKind : std::uint8_t { R1Add, R1Remove, R2Add, R2Remove, R3 };
inline constexpr int kMoveKinds = 5;

const char* to_string(MoveKind k);

// One side of an edge. Unlike HalfEdge this also addresses free loops
// (edge index 0 of an empty component).
struct Side {
  EdgeRef edge;
  bool forward = true;
  friend bool operator==(const Side&, const Side&) = default;
};

// Where a Reidemeister move applies.
//   R1Add:    anchor = {edge}; variant bit 0 = first pass Under, bit 1 = negative sign
//   R1Remove: anchor = {monogon side}
//   R2Add:    anchor = {s1, s2} sharing a face or lying in different pieces;
//             variant 0 puts s1's strand on top, 1 puts s2's strand on top
//   R2Remove: anchor = the two sides of the bigon face
//   R3:       anchor = the three sides of the triangle face
struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  std::vector<Side> anchor;
  int variant = 0;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

struct WalkPlan {
  std::uint64_t seed = 0;
  int steps = 0;
  // Relative weights indexed by MoveKind.
  std::array<double, kMoveKinds> weights{1.0, 2.0, 1.0, 2.0, 3.0};
  // Insertions are skipped once the diagram has this many crossings; 0
  // disables the cap.
  int max_crossings = 0;
};

// All move sites; throws NonPlanarError unless every piece has genus 0.
std::vector<MoveSite> enumerate_sites(const Diagram& d);
std::vector<MoveSite> enumerate_sites(const Diagram& d, MoveKind kind);

// Throws InvalidSite when `s` does not describe a legal move on `d`.
Diagram apply(const Diagram& d, const MoveSite& s);

Diagram crossing_change(const Diagram& d, CrossingId c);

// Oriented smoothing of crossing c. Remaining crossings keep their relative
// order of ids.
Diagram smooth(const Diagram& d, CrossingId c);

// Cuts edge `ea` of `a` and edge `eb` of `b` and joins them respecting
// orientation. The joined component stays at ea.component; the other
// components of b follow those of a.
Diagram connected_sum(const Diagram& a, EdgeRef ea, const Diagram& b, EdgeRef eb);
Diagram connected_sum(const Diagram& a, const Diagram& b);
// Joins two components of one diagram by an orientation-respecting band
// running inside a face that both edges bound. The joined component takes
// the place of x.component and y.component is dropped. InvalidSite when no
// such face exists (the result would not be planar).
Diagram band_sum(const Diagram& d, EdgeRef x, EdgeRef y);

Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Applies plan.steps random moves, deterministic in (d, plan). A step whose
// drawn kind has no site is skipped.
Diagram random_walk(const Diagram& d, const WalkPlan& plan);
// The same walk; element k is the diagram after k steps (k = 0..steps).
std::vector<Diagram> walk_trace(const Diagram& d, const WalkPlan& plan);

}  // namespace knots
