#pragma once

#include <optional>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/polynomial.hpp"

namespace knots {

// Traversal plan for the descending test: components are read in `order`,
// each starting at its basepoint (base[i] belongs to component i).
struct DescendingPlan {
  std::vector<Basepoint> base;
  std::vector<int> order;
};

// Component order as given, basepoint at edge 0 of each component.
DescendingPlan canonical_plan(const Diagram& d);

// First crossing (in plan traversal) whose first visit is an Under pass.
std::optional<CrossingId> first_violation(const Diagram& d, const DescendingPlan& plan);

// Every crossing is first met as an overpass; in particular every crossing
// between two components has the earlier component on top.
bool is_descending(const Diagram& d, const DescendingPlan& plan);

// Crossings to change so that `d` becomes descending under `plan`, in plan
// traversal order. The set is forced by the plan, hence minimal.
std::vector<CrossingId> unknotting_changes(const Diagram& d, const DescendingPlan& plan);

// Conway polynomial by the skein recursion C(K+) - C(K-) = t C(K0),
// terminating at descending diagrams (1 for a knot, 0 for a link).
ConwayPoly conway(const Diagram& d);
// Same, with `plan` choosing the crossings resolved at the top level and
// along its crossing-change chain.
ConwayPoly conway(const Diagram& d, const DescendingPlan& plan);

// c_n of the Conway polynomial; c_{-1} = 0.
ConwayPoly::Coeff coefficient(const Diagram& d, int n);

}  // namespace knots
