#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

using Point3 = std::array<double, 3>;

// Relative threshold on normalized determinants below which a configuration
// counts as degenerate.
inline constexpr double kGenericEps = 1e-9;
inline constexpr int kProjectionRetries = 64;

// Closed polygonal curves in space; vertex i is joined to vertex i+1 and the
// last vertex to the first.
class SpatialLink {
 public:
  // std::invalid_argument for a component with fewer than 3 vertices,
  // repeated consecutive vertices, or two segments that meet (other than
  // neighbours sharing their common vertex).
  explicit SpatialLink(std::vector<std::vector<Point3>> components);

  const std::vector<std::vector<Point3>>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()); }

 private:
  std::vector<std::vector<Point3>> components_;
};

struct ProjectionResult {
  Diagram diagram;
  Point3 direction;  // unit vector towards the viewer
  std::uint64_t perturbation_seed = 0;  // seed of the accepted rotation
};

// Orthogonal projection along a seeded random direction, retried up to
// kProjectionRetries times until it is generic: no segment seen end-on, no
// vertex on another segment, no three strands through one point. The
// strand closer to the viewer passes over. GenericityFailure otherwise.
ProjectionResult project(const SpatialLink& link, std::uint64_t seed);

// 1 when the boundary of t2 meets the interior of t1 an odd number of times.
// DegeneracyError if any 4 of the 6 points are coplanar.
int triangles_linked(const std::array<Point3, 3>& t1, const std::array<Point3, 3>& t2);

// Throws DegeneracyError if some 4 of the points are coplanar.
void require_general_position(std::span<const Point3> points);

struct SixPointResult {
  // Index triples into the input, first triple contains point 0.
  std::optional<std::pair<std::array<int, 3>, std::array<int, 3>>> witness;
  int linked_partitions = 0;  // out of 10
};

SixPointResult verify_six_points(std::span<const Point3> points);

struct SevenPointResult {
  std::optional<std::vector<int>> witness;  // Hamiltonian cycle with arf 1
  int knotted_cycles = 0;                   // out of 360
  int arf_parity = 0;
};

// Projects each of the 360 Hamiltonian cycles and takes its arf.
SevenPointResult verify_seven_points(std::span<const Point3> points, std::uint64_t seed = 0);

// Uniform in the cube [-1, 1]^3.
std::vector<Point3> random_points(int n, std::uint64_t seed);

}  // namespace knots
