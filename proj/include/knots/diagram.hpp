#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "knots/gauss_code.hpp"

namespace knots {

// Location of a pass: component index and position in its sequence.
struct PassRef {
  int component = 0;
  int index = 0;
  friend bool operator==(const PassRef&, const PassRef&) = default;
};

// Edge `index` of a component is the arc entering pass `index` (from the
// previous pass, cyclically). A free loop has the single edge index 0.
struct EdgeRef {
  int component = 0;
  int index = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// A point on the diagram away from crossings: the midpoint of an edge.
// Traversal from a basepoint starts with pass `position`.
struct Basepoint {
  int component = 0;
  int position = 0;
};

enum class DartSlot : std::uint8_t { UnderIn = 0, OverIn = 1, UnderOut = 2, OverOut = 3 };

struct Dart {
  CrossingId crossing = 0;
  DartSlot slot = DartSlot::UnderIn;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Side of an edge: forward runs along the orientation. The face of a
// half-edge is the one on its left.
struct HalfEdge {
  int edge = 0;
  bool forward = true;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

using Face = std::vector<HalfEdge>;

// Oriented link diagram held as a combinatorial map. Crossing ids are 1..n.
// Immutable: all surgery lives in free functions returning new diagrams.
class Diagram {
 public:
  // Validates `code` and relabels crossing ids to 1..n by rank.
  explicit Diagram(const GaussCode& code);
  static Diagram parse(std::string_view text);

  const GaussCode& code() const { return code_; }
  int crossing_count() const { return static_cast<int>(signs_.size()); }
  int component_count() const { return code_.component_count(); }
  int edge_count() const { return 2 * crossing_count(); }
  int free_loop_count() const;

  std::span<const Pass> component(int i) const;
  int component_length(int i) const { return static_cast<int>(component(i).size()); }
  bool is_free_loop(int i) const { return component(i).empty(); }

  bool has_crossing(CrossingId c) const { return c >= 1 && c <= crossing_count(); }
  int sign(CrossingId c) const;
  PassRef over_pass(CrossingId c) const;
  PassRef under_pass(CrossingId c) const;
  const Pass& pass(PassRef p) const;
  PassRef next(PassRef p) const;
  PassRef prev(PassRef p) const;

  // Global edge numbering, contiguous per component. Free loops have none.
  int edge_id(EdgeRef e) const;
  EdgeRef edge_ref(int edge) const;
  PassRef head(int edge) const;
  PassRef tail(int edge) const;
  Dart head_dart(int edge) const;
  Dart tail_dart(int edge) const;
  int edge_at(Dart d) const;

  // Counterclockwise order of the four darts at a crossing. Positive:
  // (under-in, over-out, under-out, over-in); negative: (under-in, over-in,
  // under-out, over-out).
  std::array<DartSlot, 4> rotation(CrossingId c) const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.code_ == b.code_; }

 private:
  GaussCode code_;
  std::vector<int> signs_;
  std::vector<PassRef> over_;
  std::vector<PassRef> under_;
  std::vector<int> edge_offset_;
};

Diagram build_diagram(const GaussCode& code);
GaussCode to_gauss(const Diagram& d);

// Faces by tracing: each half-edge continues at the clockwise-next dart.
std::vector<Face> faces(const Diagram& d);

// Connected pieces of the 4-valent graph, each a sorted list of crossing ids,
// ordered by smallest id.
std::vector<std::vector<CrossingId>> pieces(const Diagram& d);

// Genus per connected piece (V - E + F = 2 - 2g), followed by a 0 for each
// free loop.
std::vector<int> genus(const Diagram& d);
bool is_planar(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram reverse_all(const Diagram& d);
Diagram reverse_component(const Diagram& d, int component);
// Result component i is input component perm[i].
Diagram permute_components(const Diagram& d, std::span<const int> perm);

// Pass sequence of a component read from a basepoint.
std::vector<Pass> read_from(const Diagram& d, Basepoint p);

// Equality up to crossing relabeling.
bool same_up_to_relabeling(const Diagram& a, const Diagram& b);

}  // namespace knots
