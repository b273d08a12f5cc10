#include <doctest.h>

#include <algorithm>

#include "knots/arf_casson.hpp"
#include "knots/conway.hpp"
#include "knots/errors.hpp"
#include "knots/linking.hpp"
#include "knots/moves.hpp"
#include "support.hpp"

using namespace knots;
using knots::testing::cat;

namespace {

std::vector<Diagram> knots_sample() {
  std::vector<Diagram> out;
  for (const auto& name : testing::catalog_knots()) {
    out.push_back(cat(name));
    for (auto& d : testing::walked(name, 6, 13, 40, 10)) out.push_back(d);
  }
  return out;
}

Diagram sum_of(const std::string& name, int n) {
  Diagram d = cat(name);
  for (int k = 1; k < n; ++k) d = connected_sum(d, cat(name));
  return d;
}

}  // namespace

TEST_CASE("catalog values") {
  CHECK(skew_pairs(cat("unknot"), {0, 0}).empty());
  CHECK(casson(cat("unknot")) == 0);
  CHECK(casson(cat("trefoil-r")) == 1);
  CHECK(casson(cat("trefoil-l")) == 1);
  CHECK(casson(cat("fig8")) == -1);
  CHECK(casson(cat("5_1")) == 3);
  CHECK(arf(cat("unknot")) == 0);
  CHECK(arf(cat("trefoil-r")) == 1);
  CHECK(arf(cat("fig8")) == 1);
  CHECK(arf(sum_of("trefoil-r", 2)) == 0);
  CHECK(casson(sum_of("fig8", 5)) == -5);
  for (int n = 1; n <= 6; ++n) CHECK(casson(sum_of("trefoil-r", n)) == n);
}

TEST_CASE("trefoil has exactly one skew pair from every basepoint") {
  const Diagram t = cat("trefoil-r");
  for (int p = 0; p < 6; ++p) {
    const auto pairs = skew_pairs(t, {0, p});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].sign == 1);
  }
}

TEST_CASE("links are rejected") {
  CHECK_THROWS_AS(arf(cat("hopf+")), NotAKnot);
  CHECK_THROWS_AS(casson(cat("trivial-n2")), NotAKnot);
  CHECK_THROWS_AS(skew_pairs(cat("borromean"), {0, 0}), NotAKnot);
}

TEST_CASE("skew pairs match a direct positional count") {
  for (const Diagram& d : knots_sample())
    for (int p = 0; p < std::max(1, d.component_length(0)); ++p) {
      const auto [count, sum] = testing::brute_skew(d, p);
      const auto pairs = skew_pairs(d, {0, p});
      CHECK(static_cast<int>(pairs.size()) == count);
      int s = 0;
      for (const auto& q : pairs) s += q.sign;
      CHECK(s == sum);
    }
}

TEST_CASE("basepoint and direction independence") {
  for (const Diagram& d : knots_sample()) {
    const int a = arf(d), c = casson(d);
    for (int p = 0; p < std::max(1, d.component_length(0)); ++p) {
      CHECK(arf(d, {0, p}) == a);
      CHECK(casson(d, {0, p}) == c);
      auto along = skew_pairs(d, {0, p}, Direction::Along);
      auto against = skew_pairs(d, {0, p}, Direction::Against);
      CHECK(along == against);
    }
  }
}

TEST_CASE("casson equals c2 and arf is its parity") {
  for (const Diagram& d : knots_sample()) {
    CHECK(casson(d) == coefficient(d, 2));
    CHECK(arf(d) == ((casson(d) % 2) + 2) % 2);
  }
}

TEST_CASE("skein relations for arf and casson") {
  int two_component = 0;
  for (const Diagram& d : knots_sample())
    for (CrossingId c = 1; c <= d.crossing_count(); ++c) {
      const Diagram ch = crossing_change(d, c);
      const Diagram& plus = d.sign(c) > 0 ? d : ch;
      const Diagram& minus = d.sign(c) > 0 ? ch : d;
      const Diagram zero = smooth(d, c);
      REQUIRE(zero.component_count() == 2);
      ++two_component;
      CHECK(casson(plus) - casson(minus) == lk(zero, 0, 1));
      CHECK(((arf(plus) - arf(minus)) % 2 + 2) % 2 == lk2(zero, 0, 1));
    }
  CHECK(two_component > 50);
}

TEST_CASE("additivity under connected sum") {
  for (const auto& x : testing::catalog_knots())
    for (const auto& y : testing::catalog_knots()) {
      const Diagram s = connected_sum(cat(x), cat(y));
      CHECK(casson(s) == casson(cat(x)) + casson(cat(y)));
      CHECK(arf(s) == (arf(cat(x)) + arf(cat(y))) % 2);
    }
}

TEST_CASE("descending diagrams have no skew pairs") {
  for (const Diagram& d : knots_sample()) {
    const DescendingPlan plan = canonical_plan(d);
    Diagram x = d;
    for (CrossingId c : unknotting_changes(d, plan)) x = crossing_change(x, c);
    REQUIRE(is_descending(x, plan));
    CHECK(arf(x) == 0);
    CHECK(casson(x) == 0);
  }
}

TEST_CASE("trefoil and figure eight share arf") { CHECK(arf(cat("trefoil-r")) == arf(cat("fig8"))); }
