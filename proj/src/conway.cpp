#include "knots/conway.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "knots/errors.hpp"
#include "knots/moves.hpp"

namespace knots {

namespace {

void check_plan(const Diagram& d, const DescendingPlan& plan) {
  const int k = d.component_count();
  if (static_cast<int>(plan.base.size()) != k || static_cast<int>(plan.order.size()) != k)
    throw IndexError("plan size differs from component count");
  std::vector<char> hit(k, 0);
  for (int c : plan.order) {
    if (c < 0 || c >= k || hit[c]) throw IndexError("plan order is not a permutation");
    hit[c] = 1;
  }
  for (int c = 0; c < k; ++c) {
    if (plan.base[c].component != c) throw IndexError("plan basepoint on the wrong component");
    const int len = d.component_length(c);
    const int pos = plan.base[c].position;
    if (len == 0 ? pos != 0 : (pos < 0 || pos >= len)) throw IndexError("plan basepoint out of range");
  }
}

// Violations in traversal order; stops after the first when `first_only`.
std::vector<CrossingId> violations(const Diagram& d, const DescendingPlan& plan, bool first_only) {
  check_plan(d, plan);
  std::vector<char> seen(d.crossing_count() + 1, 0);
  std::vector<CrossingId> out;
  for (int c : plan.order) {
    for (const Pass& p : read_from(d, plan.base[c])) {
      if (seen[p.crossing]) continue;
      seen[p.crossing] = 1;
      if (p.role == Role::Under) {
        out.push_back(p.crossing);
        if (first_only) return out;
      }
    }
  }
  return out;
}

Diagram reduce(Diagram d) {
  for (;;) {
    auto sites = enumerate_sites(d, MoveKind::R1Remove);
    if (sites.empty()) sites = enumerate_sites(d, MoveKind::R2Remove);
    if (sites.empty()) return d;
    d = apply(d, sites.front());
  }
}

DescendingPlan cheapest_plan(const Diagram& d) {
  DescendingPlan plan = canonical_plan(d);
  // Components with more crossings go first; each basepoint is then chosen
  // greedily given the crossings already seen.
  std::stable_sort(plan.order.begin(), plan.order.end(),
                   [&](int a, int b) { return d.component_length(a) > d.component_length(b); });
  std::vector<char> seen(d.crossing_count() + 1, 0);
  for (int c : plan.order) {
    const int len = d.component_length(c);
    int best = 0, best_count = len + 1;
    for (int pos = 0; pos < len; ++pos) {
      std::vector<char> local = seen;
      int count = 0;
      for (const Pass& p : read_from(d, {c, pos})) {
        if (local[p.crossing]) continue;
        local[p.crossing] = 1;
        count += p.role == Role::Under;
      }
      if (count < best_count) best = pos, best_count = count;
    }
    plan.base[c].position = best;
    for (const Pass& p : d.component(c)) seen[p.crossing] = 1;
  }
  return plan;
}

class Evaluator {
 public:
  // Internal nodes are first reduced by crossing-removing R1/R2 moves and
  // split into pieces; neither changes the polynomial. The plan is the
  // basepoint choice with the fewest violations.
  // Virtual (non-planar) diagrams skip both shortcuts. Smoothing and
  // crossing changes preserve planarity, so one check suffices.
  explicit Evaluator(bool planar) : planar_(planar) {}

  ConwayPoly eval(const Diagram& input) {
    const Diagram d = planar_ ? reduce(input) : input;
    if (planar_ && d.component_count() > 1 && (pieces(d).size() > 1 || d.free_loop_count() > 0)) return {};
    const std::string key = to_string(canonical(d.code()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ConwayPoly r = descend(d, planar_ ? cheapest_plan(d) : canonical_plan(d));
    memo_.emplace(key, r);
    return r;
  }

  // Resolves first violations along the plan until the diagram descends:
  // C(d) = C(change(d, A)) + sign(A) t C(smooth(d, A)).
  ConwayPoly descend(Diagram d, const DescendingPlan& plan) {
    ConwayPoly acc;
    while (auto a = first_violation(d, plan)) {
      const ConwayPoly smoothed = eval(smooth(d, *a)).times_t();
      acc = d.sign(*a) > 0 ? acc + smoothed : acc - smoothed;
      d = crossing_change(d, *a);
    }
    return acc + (d.component_count() == 1 ? ConwayPoly::constant(1) : ConwayPoly{});
  }

 private:
  bool planar_;
  std::unordered_map<std::string, ConwayPoly> memo_;
};

}  // namespace

DescendingPlan canonical_plan(const Diagram& d) {
  DescendingPlan plan;
  for (int c = 0; c < d.component_count(); ++c) {
    plan.base.push_back({c, 0});
    plan.order.push_back(c);
  }
  return plan;
}

std::optional<CrossingId> first_violation(const Diagram& d, const DescendingPlan& plan) {
  auto v = violations(d, plan, true);
  if (v.empty()) return std::nullopt;
  return v.front();
}

bool is_descending(const Diagram& d, const DescendingPlan& plan) { return !first_violation(d, plan); }

std::vector<CrossingId> unknotting_changes(const Diagram& d, const DescendingPlan& plan) {
  return violations(d, plan, false);
}

ConwayPoly conway(const Diagram& d) { return Evaluator(is_planar(d)).eval(d); }

ConwayPoly conway(const Diagram& d, const DescendingPlan& plan) {
  check_plan(d, plan);
  return Evaluator(is_planar(d)).descend(d, plan);
}

ConwayPoly::Coeff coefficient(const Diagram& d, int n) {
  if (n < -1) throw IndexError("coefficient index must be at least -1");
  return conway(d).coefficient(n);
}

}  // namespace knots
