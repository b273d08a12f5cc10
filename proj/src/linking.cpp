#include "knots/linking.hpp"

#include "knots/errors.hpp"

namespace knots {

namespace {

void check_pair(const Diagram& d, int i, int j) {
  const int k = d.component_count();
  if (i < 0 || j < 0 || i >= k || j >= k) throw IndexError("component index out of range");
  if (i == j) throw IndexError("linking number needs two distinct components");
}

}  // namespace

int lk(const Diagram& d, int i, int j) {
  check_pair(d, i, j);
  int sum = 0;
  for (CrossingId c = 1; c <= d.crossing_count(); ++c)
    if (d.over_pass(c).component == i && d.under_pass(c).component == j) sum += d.sign(c);
  return sum;
}

int lk2(const Diagram& d, int i, int j) {
  check_pair(d, i, j);
  int count = 0;
  for (CrossingId c = 1; c <= d.crossing_count(); ++c)
    if (d.over_pass(c).component == i && d.under_pass(c).component == j) ++count;
  return count % 2;
}

LinkingReport linking_report(const Diagram& d, int i, int j) { return {i, j, lk2(d, i, j), lk(d, i, j)}; }

LinkingMatrix linking_matrix(const Diagram& d) {
  const int k = d.component_count();
  LinkingMatrix m{std::vector<std::vector<int>>(k, std::vector<int>(k, 0)),
                  std::vector<std::vector<int>>(k, std::vector<int>(k, 0))};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) {
        m.lk2[i][j] = lk2(d, i, j);
        m.lk[i][j] = lk(d, i, j);
      }
  return m;
}

}  // namespace knots
