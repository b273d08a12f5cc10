#pragma once

// Shared fixtures and independent oracles for the test binaries. The oracles
// work from the raw Gauss code and never call the module under test.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knots/catalog.hpp"
#include "knots/diagram.hpp"
#include "knots/polynomial.hpp"

namespace knots::testing {

Diagram cat(const std::string& name);

std::vector<std::string> catalog_knots();  // unknot, trefoils, fig8, 5_1
std::vector<std::string> catalog_links();  // two or more components

// Seeded walks from catalog diagrams, capped at `max_crossings`.
std::vector<Diagram> walked(const std::string& name, int count, std::uint64_t seed, int steps = 40,
                            int max_crossings = 10);

// Connected sum of two 2-component links joining first with first and
// second with second, searching edge choices until the bands fit.
Diagram link_sum(const Diagram& a, const Diagram& b);

// Laurent polynomial in t, exponent -> coefficient, no zero entries.
using Laurent = std::map<int, std::int64_t>;

// Alexander polynomial of a knot diagram from the Fox-calculus matrix of the
// Wirtinger presentation, normalized to be symmetric with value 1 at t = 1.
Laurent alexander(const Diagram& knot);

// Delta(t) = C(t^{1/2} - t^{-1/2}); only even powers of the argument.
Laurent alexander_from_conway(const ConwayPoly& c);

// Fox colorings mod p by enumerating every assignment to the arcs.
std::uint64_t brute_colorings(const Diagram& d, int p);
int brute_arc_count(const Diagram& d);

// Skew pairs read from pass `start` of a knot: (count, signed sum).
std::pair<int, int> brute_skew(const Diagram& knot, int start);

// Sum of signs of crossings where component i is over component j.
int brute_lk(const Diagram& d, int i, int j);

std::string show(const Laurent& p);

}  // namespace knots::testing
