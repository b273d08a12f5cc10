#include "support.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "knots/errors.hpp"
#include "knots/moves.hpp"

namespace knots::testing {

Diagram cat(const std::string& name) { return lookup(name).diagram; }

std::vector<std::string> catalog_knots() { return {"unknot", "trefoil-r", "trefoil-l", "fig8", "5_1"}; }

std::vector<std::string> catalog_links() {
  return {"hopf+", "hopf-", "whitehead", "borromean", "trivial-n2", "trivial-n3"};
}

std::vector<Diagram> walked(const std::string& name, int count, std::uint64_t seed, int steps, int max_crossings) {
  const Diagram base = cat(name);
  std::vector<Diagram> out;
  for (int k = 0; k < count; ++k) {
    WalkPlan plan;
    plan.seed = seed * 7919 + static_cast<std::uint64_t>(k);
    plan.steps = steps;
    plan.max_crossings = max_crossings;
    out.push_back(random_walk(base, plan));
  }
  return out;
}

Diagram link_sum(const Diagram& a, const Diagram& b) {
  for (int ea = 0; ea < std::max(1, a.component_length(0)); ++ea)
    for (int eb = 0; eb < std::max(1, b.component_length(0)); ++eb) {
      const Diagram s = connected_sum(a, {0, ea}, b, {0, eb});
      for (int x = 0; x < std::max(1, s.component_length(1)); ++x)
        for (int y = 0; y < std::max(1, s.component_length(2)); ++y) {
          try {
            return band_sum(s, {1, x}, {2, y});
          } catch (const InvalidSite&) {
          }
        }
    }
  throw std::logic_error("no planar pairwise connected sum found");
}

namespace {

using Poly = std::vector<std::int64_t>;  // ascending powers of t

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Exact division in Z[t]; throws if the remainder is nonzero.
Poly divide(Poly a, const Poly& b) {
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t lead = a[k + b.size() - 1];
    if (lead % b.back() != 0) throw std::logic_error("inexact polynomial division");
    q[k] = lead / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

// Fraction-free Gaussian elimination.
Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  Poly prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  if (negate)
    for (auto& c : d) c = -c;
  return d;
}

struct RawArcs {
  int count = 0;
  // by crossing id: over arc, under-in arc, under-out arc
  std::map<CrossingId, std::array<int, 3>> at;
};

RawArcs raw_arcs(const Diagram& d) {
  RawArcs out;
  for (const auto& comp : d.code().components) {
    const int len = static_cast<int>(comp.size());
    int start = -1;
    for (int k = 0; k < len; ++k)
      if (comp[k].role == Role::Under) {
        start = k;
        break;
      }
    if (start < 0) {
      const int arc = out.count++;
      for (const Pass& p : comp) out.at[p.crossing][0] = arc;
      continue;
    }
    const int first = out.count;
    int current = out.count++;
    out.at[comp[start].crossing][2] = current;
    for (int step = 1; step <= len; ++step) {
      const Pass& p = comp[(start + step) % len];
      if (p.role == Role::Over) {
        out.at[p.crossing][0] = current;
      } else if (step < len) {
        out.at[p.crossing][1] = current;
        current = out.count++;
        out.at[p.crossing][2] = current;
      } else {
        out.at[p.crossing][1] = current;
        out.at[p.crossing][2] = first;
      }
    }
  }
  return out;
}

}  // namespace

Laurent alexander(const Diagram& knot) {
  if (knot.component_count() != 1) throw std::invalid_argument("alexander oracle is for knots");
  if (knot.crossing_count() == 0) return {{0, 1}};
  const RawArcs arcs = raw_arcs(knot);
  const int n = arcs.count;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  int row = 0;
  auto add = [&](int r, int col, const Poly& v) {
    Poly sum = m[r][col];
    if (sum.size() < v.size()) sum.resize(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
    trim(sum);
    m[r][col] = sum;
  };
  for (const auto& [c, a] : arcs.at) {
    add(row, a[0], {1, -1});
    if (knot.sign(c) > 0) {
      add(row, a[1], {0, 1});
      add(row, a[2], {-1});
    } else {
      add(row, a[1], {-1});
      add(row, a[2], {0, 1});
    }
    ++row;
  }
  m.pop_back();
  for (auto& r : m) r.pop_back();
  Poly det = determinant(m);
  if (det.empty()) return {};
  std::size_t low = 0;
  while (det[low] == 0) ++low;
  const int span = static_cast<int>(det.size() - 1 - low);
  if (span % 2 != 0) throw std::logic_error("knot Alexander polynomial has odd span");
  const std::int64_t at_one = std::accumulate(det.begin(), det.end(), std::int64_t{0});
  Laurent out;
  for (std::size_t k = low; k < det.size(); ++k)
    if (det[k] != 0) out[static_cast<int>(k - low) - span / 2] = at_one < 0 ? -det[k] : det[k];
  return out;
}

Laurent alexander_from_conway(const ConwayPoly& c) {
  Laurent out;
  Laurent power{{0, 1}};  // (t - 2 + t^-1)^k
  for (int k = 0; 2 * k <= std::max(c.degree(), 0); ++k) {
    if (c.coefficient(2 * k - 1) != 0 && k > 0) throw std::invalid_argument("odd Conway coefficient on a knot");
    for (const auto& [e, v] : power) out[e] += c.coefficient(2 * k) * v;
    Laurent next;
    for (const auto& [e, v] : power) {
      next[e + 1] += v;
      next[e] -= 2 * v;
      next[e - 1] += v;
    }
    power = next;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int brute_arc_count(const Diagram& d) { return raw_arcs(d).count; }

std::uint64_t brute_colorings(const Diagram& d, int p) {
  const RawArcs arcs = raw_arcs(d);
  std::vector<int> colour(arcs.count, 0);
  std::uint64_t total = 0;
  for (;;) {
    bool ok = true;
    for (const auto& [c, a] : arcs.at)
      if (((2 * colour[a[0]] - colour[a[1]] - colour[a[2]]) % p + p) % p != 0) {
        ok = false;
        break;
      }
    total += ok;
    int k = 0;
    while (k < arcs.count && ++colour[k] == p) colour[k++] = 0;
    if (k == arcs.count) break;
  }
  return total;
}

std::pair<int, int> brute_skew(const Diagram& knot, int start) {
  const auto& comp = knot.code().components.at(0);
  const int len = static_cast<int>(comp.size());
  std::map<CrossingId, int> over_at, under_at, sign;
  for (int k = 0; k < len; ++k) {
    const Pass& p = comp[(start + k) % len];
    (p.role == Role::Over ? over_at : under_at)[p.crossing] = k;
    sign[p.crossing] = p.sign;
  }
  int count = 0, sum = 0;
  for (const auto& [a, sa] : sign)
    for (const auto& [b, sb] : sign) {
      if (a == b) continue;
      if (over_at[a] < under_at[b] && under_at[b] < under_at[a] && under_at[a] < over_at[b]) {
        ++count;
        sum += sa * sb;
      }
    }
  return {count, sum};
}

int brute_lk(const Diagram& d, int i, int j) {
  const auto& comps = d.code().components;
  int sum = 0;
  for (const Pass& p : comps.at(i)) {
    if (p.role != Role::Over) continue;
    for (const Pass& q : comps.at(j))
      if (q.crossing == p.crossing) sum += p.sign;
  }
  return sum;
}

std::string show(const Laurent& p) {
  std::string s;
  for (const auto& [e, v] : p) s += (s.empty() ? "" : " ") + std::to_string(v) + "t^" + std::to_string(e);
  return s.empty() ? "0" : s;
}

}  // namespace knots::testing
