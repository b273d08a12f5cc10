#include "knots/arf_casson.hpp"

#include <algorithm>

#include "knots/errors.hpp"

namespace knots {

std::vector<SkewPair> skew_pairs(const Diagram& d, Basepoint p, Direction dir) {
  if (d.component_count() != 1) throw NotAKnot("skew pairs need a one-component diagram");
  auto seq = read_from(d, p);
  if (dir == Direction::Against) {
    // Going backwards from the basepoint meets pass position-1 first.
    std::reverse(seq.begin(), seq.end());
  }
  const int n = d.crossing_count();
  std::vector<int> over_at(n + 1), under_at(n + 1);
  for (int i = 0; i < static_cast<int>(seq.size()); ++i)
    (seq[i].role == Role::Over ? over_at : under_at)[seq[i].crossing] = i;
  auto skew = [&](CrossingId a, CrossingId b) {
    return over_at[a] < under_at[b] && under_at[b] < under_at[a] && under_at[a] < over_at[b];
  };
  std::vector<SkewPair> out;
  for (CrossingId a = 1; a <= n; ++a)
    for (CrossingId b = a + 1; b <= n; ++b)
      if (skew(a, b) || skew(b, a)) out.push_back({a, b, d.sign(a) * d.sign(b)});
  return out;
}

int arf(const Diagram& d, Basepoint p) { return static_cast<int>(skew_pairs(d, p).size() % 2); }

int arf(const Diagram& d) { return arf(d, Basepoint{}); }

int casson(const Diagram& d, Basepoint p) {
  int sum = 0;
  for (const auto& s : skew_pairs(d, p)) sum += s.sign;
  return sum;
}

int casson(const Diagram& d) { return casson(d, Basepoint{}); }

}  // namespace knots
