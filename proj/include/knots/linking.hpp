#pragma once

#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Number mod 2 of crossings where component i passes over component j.
int lk2(const Diagram& d, int i, int j);

// Sum of crossing signs over crossings where component i passes over j.
int lk(const Diagram& d, int i, int j);

struct LinkingReport {
  int first = 0;
  int second = 0;
  int lk2 = 0;
  int lk = 0;
};

// lk2 and lk for every ordered pair of components; diagonal entries are 0.
struct LinkingMatrix {
  std::vector<std::vector<int>> lk2;
  std::vector<std::vector<int>> lk;
};

LinkingReport linking_report(const Diagram& d, int i, int j);
LinkingMatrix linking_matrix(const Diagram& d);

}  // namespace knots
