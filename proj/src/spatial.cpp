#include "knots/spatial.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "knots/arf_casson.hpp"
#include "knots/errors.hpp"

namespace knots {

namespace {

using Eigen::Vector2d;
using Eigen::Vector3d;

Vector3d vec(const Point3& p) { return {p[0], p[1], p[2]}; }

double cross2(const Vector2d& a, const Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

double extent(const std::vector<std::vector<Point3>>& comps) {
  double s = 0;
  for (const auto& c : comps)
    for (const auto& p : c)
      for (double x : p) s = std::max(s, std::abs(x));
  return s > 0 ? s : 1.0;
}

// Distance between segments p0p1 and q0q1 (clamped closest points).
double segment_distance(const Vector3d& p0, const Vector3d& p1, const Vector3d& q0, const Vector3d& q1) {
  const Vector3d d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  const double c = d1.dot(r), b = d1.dot(d2), denom = a * e - b * b;
  double s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0) {
    t = 0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1) {
    t = 1;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return (p0 + d1 * s - q0 - d2 * t).norm();
}

double point_segment_distance(const Vector2d& p, const Vector2d& a, const Vector2d& b) {
  const Vector2d ab = b - a;
  const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return (a + ab * t - p).norm();
}

// Flattened segment list: segment k of component c joins vertex k to k+1.
struct Segment {
  int component;
  int index;
  Vector3d a, b;
};

std::vector<Segment> segments_of(const std::vector<std::vector<Point3>>& comps) {
  std::vector<Segment> out;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const int m = static_cast<int>(comps[c].size());
    for (int k = 0; k < m; ++k) out.push_back({c, k, vec(comps[c][k]), vec(comps[c][(k + 1) % m])});
  }
  return out;
}

bool adjacent(const Segment& s, const Segment& t, const std::vector<std::vector<Point3>>& comps) {
  if (s.component != t.component) return false;
  const int m = static_cast<int>(comps[s.component].size());
  return (s.index + 1) % m == t.index || (t.index + 1) % m == s.index;
}

struct Crossing {
  double param = 0;  // along the segment
  int id = 0;
  Role role = Role::Over;
};

struct NotGeneric {};

Diagram project_along(const SpatialLink& link, const Eigen::Matrix3d& basis, double scale) {
  const auto& comps = link.components();
  const Vector3d u = basis.col(0), v = basis.col(1), dir = basis.col(2);
  const auto segs = segments_of(comps);
  const double tol = kGenericEps * scale;

  std::vector<Vector2d> a2(segs.size()), b2(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    a2[i] = {segs[i].a.dot(u), segs[i].a.dot(v)};
    b2[i] = {segs[i].b.dot(u), segs[i].b.dot(v)};
    if ((b2[i] - a2[i]).norm() <= kGenericEps * (segs[i].b - segs[i].a).norm()) throw NotGeneric{};
  }

  std::vector<std::vector<Crossing>> on_segment(segs.size());
  std::vector<int> signs;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Vector2d di = b2[i] - a2[i], dj = b2[j] - a2[j];
      if (adjacent(segs[i], segs[j], comps)) {
        // Neighbours may only share their common vertex.
        if (std::abs(cross2(di, dj)) <= kGenericEps * di.norm() * dj.norm()) throw NotGeneric{};
        continue;
      }
      if (point_segment_distance(a2[i], a2[j], b2[j]) <= tol || point_segment_distance(b2[i], a2[j], b2[j]) <= tol ||
          point_segment_distance(a2[j], a2[i], b2[i]) <= tol || point_segment_distance(b2[j], a2[i], b2[i]) <= tol)
        throw NotGeneric{};
      const double o1 = cross2(di, a2[j] - a2[i]), o2 = cross2(di, b2[j] - a2[i]);
      const double o3 = cross2(dj, a2[i] - a2[j]), o4 = cross2(dj, b2[i] - a2[j]);
      if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) continue;
      const double s = o3 / (o3 - o4);
      const double t = o1 / (o1 - o2);
      const double depth_i = segs[i].a.dot(dir) + s * (segs[i].b - segs[i].a).dot(dir);
      const double depth_j = segs[j].a.dot(dir) + t * (segs[j].b - segs[j].a).dot(dir);
      if (std::abs(depth_i - depth_j) <= tol) throw NotGeneric{};
      const bool i_over = depth_i > depth_j;
      const int id = static_cast<int>(signs.size()) + 1;
      const Vector2d& over = i_over ? di : dj;
      const Vector2d& under = i_over ? dj : di;
      signs.push_back(cross2(over, under) > 0 ? 1 : -1);
      on_segment[i].push_back({s, id, i_over ? Role::Over : Role::Under});
      on_segment[j].push_back({t, id, i_over ? Role::Under : Role::Over});
    }
  }

  GaussCode code;
  code.components.resize(comps.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& list = on_segment[i];
    std::sort(list.begin(), list.end(), [](const Crossing& x, const Crossing& y) { return x.param < y.param; });
    const double len = (b2[i] - a2[i]).norm();
    for (std::size_t k = 1; k < list.size(); ++k)
      if ((list[k].param - list[k - 1].param) * len <= tol) throw NotGeneric{};
    for (const Crossing& x : list) code.components[segs[i].component].push_back({x.id, x.role, signs[x.id - 1]});
  }
  Diagram d(code);
  if (!is_planar(d)) throw std::logic_error("projection produced a non-planar diagram");
  return d;
}

Eigen::Matrix3d random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  q.normalize();
  return q.toRotationMatrix();
}

double orient(const Vector3d& a, const Vector3d& b, const Vector3d& c, const Vector3d& d) {
  return (b - a).dot((c - a).cross(d - a));
}

bool segment_hits_triangle(const Vector3d& p, const Vector3d& q, const std::array<Vector3d, 3>& t) {
  const auto& [a, b, c] = t;
  if ((orient(a, b, c, p) > 0) == (orient(a, b, c, q) > 0)) return false;
  const bool s1 = orient(p, q, a, b) > 0, s2 = orient(p, q, b, c) > 0, s3 = orient(p, q, c, a) > 0;
  return s1 == s2 && s2 == s3;
}

int crossings_parity(const std::array<Vector3d, 3>& t1, const std::array<Vector3d, 3>& t2) {
  int n = 0;
  for (int k = 0; k < 3; ++k) n += segment_hits_triangle(t2[k], t2[(k + 1) % 3], t1);
  return n % 2;
}

}  // namespace

SpatialLink::SpatialLink(std::vector<std::vector<Point3>> components) : components_(std::move(components)) {
  const double tol = kGenericEps * extent(components_);
  for (const auto& c : components_) {
    if (c.size() < 3) throw std::invalid_argument("a closed polygon needs at least 3 vertices");
    for (std::size_t k = 0; k < c.size(); ++k)
      if ((vec(c[k]) - vec(c[(k + 1) % c.size()])).norm() <= tol)
        throw std::invalid_argument("consecutive vertices coincide");
  }
  const auto segs = segments_of(components_);
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (adjacent(segs[i], segs[j], components_)) {
        // Shared vertex; reject a neighbour folding back along the segment.
        const Vector3d di = segs[i].b - segs[i].a, dj = segs[j].b - segs[j].a;
        const bool i_first = segs[i].b == segs[j].a;
        const Vector3d out_i = i_first ? Vector3d(-di) : di;
        const Vector3d out_j = i_first ? dj : Vector3d(-dj);
        if (out_i.cross(out_j).norm() <= kGenericEps * di.norm() * dj.norm() && out_i.dot(out_j) > 0)
          throw std::invalid_argument("polygon folds back on itself");
        continue;
      }
      if (segment_distance(segs[i].a, segs[i].b, segs[j].a, segs[j].b) <= tol)
        throw std::invalid_argument("polygonal link intersects itself");
    }
}

ProjectionResult project(const SpatialLink& link, std::uint64_t seed) {
  const double scale = extent(link.components());
  std::seed_seq seq{seed};
  std::mt19937_64 seeds(seq);
  for (int attempt = 0; attempt < kProjectionRetries; ++attempt) {
    const std::uint64_t s = seeds();
    const Eigen::Matrix3d basis = random_rotation(s);
    try {
      Diagram d = project_along(link, basis, scale);
      const Vector3d dir = basis.col(2);
      return {std::move(d), {dir.x(), dir.y(), dir.z()}, s};
    } catch (const NotGeneric&) {
    }
  }
  throw GenericityFailure("no generic projection direction after " + std::to_string(kProjectionRetries) + " tries");
}

void require_general_position(std::span<const Point3> points) {
  const int n = static_cast<int>(points.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const Vector3d pa = vec(points[a]), pb = vec(points[b]), pc = vec(points[c]), pd = vec(points[d]);
          const double norm = (pb - pa).norm() * (pc - pa).norm() * (pd - pa).norm();
          if (norm == 0 || std::abs(orient(pa, pb, pc, pd)) <= kGenericEps * norm)
            throw DegeneracyError("points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                  std::to_string(c) + ", " + std::to_string(d) + " are coplanar");
        }
}

int triangles_linked(const std::array<Point3, 3>& t1, const std::array<Point3, 3>& t2) {
  const std::array<Point3, 6> all{t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]};
  require_general_position(all);
  const std::array<Vector3d, 3> v1{vec(t1[0]), vec(t1[1]), vec(t1[2])};
  const std::array<Vector3d, 3> v2{vec(t2[0]), vec(t2[1]), vec(t2[2])};
  const int forward = crossings_parity(v1, v2);
  if (forward != crossings_parity(v2, v1)) throw std::logic_error("triangle linking parity is not symmetric");
  return forward;
}

SixPointResult verify_six_points(std::span<const Point3> points) {
  if (points.size() != 6) throw std::invalid_argument("need exactly 6 points");
  require_general_position(points);
  SixPointResult out;
  for (int b = 1; b < 6; ++b)
    for (int c = b + 1; c < 6; ++c) {
      std::array<int, 3> first{0, b, c}, second{};
      for (int k = 1, m = 0; k < 6; ++k)
        if (k != b && k != c) second[m++] = k;
      auto tri = [&](const std::array<int, 3>& ix) {
        return std::array<Point3, 3>{points[ix[0]], points[ix[1]], points[ix[2]]};
      };
      if (triangles_linked(tri(first), tri(second)) == 1) {
        ++out.linked_partitions;
        if (!out.witness) out.witness = std::pair{first, second};
      }
    }
  return out;
}

SevenPointResult verify_seven_points(std::span<const Point3> points, std::uint64_t seed) {
  if (points.size() != 7) throw std::invalid_argument("need exactly 7 points");
  require_general_position(points);
  SevenPointResult out;
  std::vector<int> rest(6);
  std::iota(rest.begin(), rest.end(), 1);
  std::uint64_t index = 0;
  do {
    // Each undirected cycle through point 0 once.
    if (rest.front() > rest.back()) continue;
    std::vector<Point3> polygon{points[0]};
    for (int k : rest) polygon.push_back(points[k]);
    const SpatialLink link({polygon});
    const int a = arf(project(link, seed * 1000003u + index++).diagram);
    if (a == 1) {
      ++out.knotted_cycles;
      if (!out.witness) {
        out.witness = std::vector<int>{0};
        out.witness->insert(out.witness->end(), rest.begin(), rest.end());
      }
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  out.arf_parity = out.knotted_cycles % 2;
  return out;
}

std::vector<Point3> random_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Point3> out(n);
  for (auto& p : out)
    for (double& x : p) x = coord(rng);
  return out;
}

}  // namespace knots
