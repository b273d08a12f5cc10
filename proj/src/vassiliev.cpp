#include "knots/vassiliev.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "knots/errors.hpp"
#include "knots/moves.hpp"

namespace knots {

SingularDiagram::SingularDiagram(Diagram base, std::vector<CrossingId> doubles)
    : base_(std::move(base)), doubles_(std::move(doubles)) {
  if (base_.component_count() != 1) throw NotAKnot("singular diagrams are knot diagrams");
  for (CrossingId c : doubles_)
    if (!base_.has_crossing(c)) throw UnknownCrossing("double point " + std::to_string(c) + " is not a crossing");
  std::sort(doubles_.begin(), doubles_.end());
  doubles_.erase(std::unique(doubles_.begin(), doubles_.end()), doubles_.end());
}

namespace {

std::vector<int> rename_by_first_occurrence(std::span<const int> word) {
  std::map<int, int> to;
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word) {
    auto [it, fresh] = to.emplace(x, static_cast<int>(to.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

ChordDiagram ChordDiagram::from_word(std::span<const int> word) {
  std::map<int, int> count;
  for (int x : word) ++count[x];
  for (const auto& [letter, k] : count)
    if (k != 2) throw std::invalid_argument("every chord letter must occur exactly twice");
  ChordDiagram out;
  const std::size_t len = word.size();
  for (std::size_t r = 0; r < std::max<std::size_t>(len, 1); ++r) {
    std::vector<int> rotated;
    rotated.reserve(len);
    for (std::size_t i = 0; i < len; ++i) rotated.push_back(word[(r + i) % len]);
    auto renamed = rename_by_first_occurrence(rotated);
    if (r == 0 || renamed < out.word_) out.word_ = std::move(renamed);
  }
  return out;
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
  if (text == "()") return {};
  std::vector<int> word;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') {
      word.push_back(ch - '0');
    } else if (ch >= 'a' && ch <= 'z') {
      word.push_back(10 + (ch - 'a'));
    } else {
      throw std::invalid_argument("bad chord letter '" + std::string(1, ch) + "'");
    }
  }
  return from_word(word);
}

bool ChordDiagram::has_isolated_chord() const {
  const std::size_t len = word_.size();
  for (std::size_t i = 0; i < len; ++i)
    if (word_[i] == word_[(i + 1) % len] && len > 0) return true;
  return false;
}

std::string to_string(const ChordDiagram& c) {
  if (c.word().empty()) return "()";
  std::string s;
  for (int x : c.word()) s += x <= 9 ? static_cast<char>('0' + x) : static_cast<char>('a' + x - 10);
  return s;
}

ChordDiagram sigma(const SingularDiagram& s) {
  std::vector<int> word;
  for (const Pass& p : s.base().component(0))
    if (std::binary_search(s.doubles().begin(), s.doubles().end(), p.crossing)) word.push_back(p.crossing);
  return ChordDiagram::from_word(word);
}

std::vector<std::pair<Diagram, int>> resolutions(const SingularDiagram& s) {
  const auto& dbl = s.doubles();
  const int m = static_cast<int>(dbl.size());
  std::vector<std::pair<Diagram, int>> out;
  out.reserve(std::size_t{1} << m);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Diagram d = s.base();
    for (int i = 0; i < m; ++i) {
      const int want = (mask >> i) & 1u ? -1 : 1;
      if (d.sign(dbl[i]) != want) d = crossing_change(d, dbl[i]);
    }
    out.emplace_back(std::move(d), std::popcount(mask));
  }
  return out;
}

std::int64_t extend(const KnotInvariant& inv, const SingularDiagram& s) {
  std::int64_t sum = 0;
  for (const auto& [d, parity] : resolutions(s)) {
    const std::int64_t v = inv(d);
    if (__builtin_add_overflow(sum, parity % 2 == 0 ? v : -v, &sum)) throw std::overflow_error("extend overflow");
  }
  return sum;
}

namespace {

void matchings(std::vector<int>& word, int next_letter, std::set<ChordDiagram>& out) {
  auto first_free = std::find(word.begin(), word.end(), 0);
  if (first_free == word.end()) {
    out.insert(ChordDiagram::from_word(word));
    return;
  }
  *first_free = next_letter;
  for (auto it = first_free + 1; it != word.end(); ++it) {
    if (*it != 0) continue;
    *it = next_letter;
    matchings(word, next_letter + 1, out);
    *it = 0;
  }
  *first_free = 0;
}

}  // namespace

std::vector<ChordDiagram> enumerate_chord_diagrams(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("chord diagram enumeration supports 0..6 chords");
  std::set<ChordDiagram> out;
  std::vector<int> word(2 * n, 0);
  matchings(word, 1, out);
  return {out.begin(), out.end()};
}

bool check_1t(const WeightSystem& lambda, int n) {
  for (const auto& d : enumerate_chord_diagrams(n))
    if (d.has_isolated_chord() && lambda.at(d) != 0) return false;
  return true;
}

bool check_4t(const WeightSystem& lambda, int n) {
  auto value = [&](const std::vector<int>& w) { return lambda.at(ChordDiagram::from_word(w)); };
  for (const auto& d : enumerate_chord_diagrams(n)) {
    const auto& w = d.word();
    const int len = static_cast<int>(w.size());
    for (int m = 0; m < len; ++m) {
      const int mobile = w[m];
      std::vector<int> skeleton;
      for (int i = 0; i < len; ++i)
        if (i != m) skeleton.push_back(w[i]);
      for (int other = 1; other <= n; ++other) {
        if (other == mobile) continue;
        std::vector<int> q;
        for (int i = 0; i < len - 1; ++i)
          if (skeleton[i] == other) q.push_back(i);
        auto insert_at = [&](int pos) {
          std::vector<int> v = skeleton;
          v.insert(v.begin() + pos, mobile);
          return value(v);
        };
        const std::int64_t sum = insert_at(q[0]) - insert_at(q[0] + 1) + insert_at(q[1]) - insert_at(q[1] + 1);
        if (sum != 0) return false;
      }
    }
  }
  return true;
}

SymbolResult symbol(const KnotInvariant& inv, int n, std::span<const SingularDiagram> samples) {
  SymbolResult out;
  for (const auto& s : samples) {
    if (static_cast<int>(s.doubles().size()) != n) continue;
    const ChordDiagram c = sigma(s);
    const std::int64_t v = extend(inv, s);
    auto [it, fresh] = out.values.emplace(c, v);
    if (!fresh && it->second != v) out.consistent = false;
    ++out.samples[c];
  }
  return out;
}

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

struct PassEvent {
  double time = 0;
  CrossingId crossing = 0;
  Vec2 dir;
};

int orientation_sign(Vec2 over, Vec2 under) { return over.x * under.y - over.y * under.x > 0 ? 1 : -1; }

}  // namespace

// The circle is unrolled onto the x-axis, one slot per letter, traversed
// left to right and closed by a large arc above everything. The first visit
// of a chord lies on the axis. At the second visit the curve leaves the axis
// upward, runs back along a semicircle above the axis, crosses the axis at
// the first visit (the double point) and returns along the mirror
// semicircle below. Two semicircles on the same side meet exactly when
// their chords interleave; those are the only extra crossings.
SingularDiagram realize(const ChordDiagram& chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& canon = chords.word();
  const int len = static_cast<int>(canon.size());
  const int n = chords.chord_count();
  if (n == 0) return SingularDiagram(Diagram(GaussCode{{{}}}), {});
  const int shift = static_cast<int>(rng() % static_cast<std::uint64_t>(len));
  std::vector<int> word(len);
  for (int i = 0; i < len; ++i) word[i] = canon[(i + shift) % len];

  std::vector<double> x(len);
  for (int i = 0; i < len; ++i) x[i] = i + 0.45 * std::fmod(i * std::numbers::phi, 1.0);
  std::vector<int> first(n + 1, -1), second(n + 1, -1);
  for (int i = 0; i < len; ++i) (first[word[i]] < 0 ? first[word[i]] : second[word[i]]) = i;

  std::vector<PassEvent> events;
  std::vector<std::pair<int, int>> pass_index;  // per crossing: indices into events
  auto add_crossing = [&](PassEvent a, PassEvent b) {
    const CrossingId id = static_cast<CrossingId>(pass_index.size()) + 1;
    a.crossing = b.crossing = id;
    events.push_back(a);
    events.push_back(b);
    pass_index.emplace_back(static_cast<int>(events.size()) - 2, static_cast<int>(events.size()) - 1);
    return id;
  };
  auto tangent = [](double theta) { return Vec2{-std::sin(theta), std::cos(theta)}; };
  // Time along the finger of chord k: axis slot b, then theta in (0, 2pi).
  auto finger_time = [&](int k, double theta) { return 10.0 * second[k] + 1.0 + theta / std::numbers::pi; };

  std::vector<CrossingId> doubles;
  for (int k = 1; k <= n; ++k)
    doubles.push_back(add_crossing({10.0 * first[k], 0, {1, 0}}, {finger_time(k, std::numbers::pi), 0, {0, -1}}));

  for (int k = 1; k <= n; ++k)
    for (int j = k + 1; j <= n; ++j) {
      const bool interleave = (first[k] < first[j] && first[j] < second[k] && second[k] < second[j]) ||
                              (first[j] < first[k] && first[k] < second[j] && second[j] < second[k]);
      if (!interleave) continue;
      const double mk = (x[first[k]] + x[second[k]]) / 2, rk = (x[second[k]] - x[first[k]]) / 2;
      const double mj = (x[first[j]] + x[second[j]]) / 2, rj = (x[second[j]] - x[first[j]]) / 2;
      const double px = (rk * rk - rj * rj + mj * mj - mk * mk) / (2 * (mj - mk));
      const double py = std::sqrt(std::max(0.0, rk * rk - (px - mk) * (px - mk)));
      const double tk = std::atan2(py, px - mk);
      const double tj = std::atan2(py, px - mj);
      // Upper semicircles, then their mirror images below the axis.
      add_crossing({finger_time(k, tk), 0, tangent(tk)}, {finger_time(j, tj), 0, tangent(tj)});
      const double lk = 2 * std::numbers::pi - tk, lj = 2 * std::numbers::pi - tj;
      add_crossing({finger_time(k, lk), 0, tangent(lk)}, {finger_time(j, lj), 0, tangent(lj)});
    }

  std::vector<Role> role_of_event(events.size());
  std::vector<int> sign_of(pass_index.size());
  for (std::size_t c = 0; c < pass_index.size(); ++c) {
    auto [a, b] = pass_index[c];
    const bool a_over = rng() & 1u;
    role_of_event[a] = a_over ? Role::Over : Role::Under;
    role_of_event[b] = a_over ? Role::Under : Role::Over;
    sign_of[c] = a_over ? orientation_sign(events[a].dir, events[b].dir) : orientation_sign(events[b].dir, events[a].dir);
  }
  std::vector<int> order(events.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return events[a].time < events[b].time; });
  GaussCode code{{{}}};
  for (int e : order) {
    const CrossingId c = events[e].crossing;
    code.components[0].push_back({c, role_of_event[e], sign_of[c - 1]});
  }
  Diagram d(code);
  if (!is_planar(d)) throw std::logic_error("chord diagram realization is not planar");
  return SingularDiagram(std::move(d), std::move(doubles));
}

std::vector<SingularDiagram> sample_singular_knots(std::span<const Diagram> bases, int n, int count,
                                                   std::uint64_t seed) {
  if (bases.empty()) throw std::invalid_argument("no base knots to sample from");
  std::mt19937_64 rng(seed);
  std::vector<SingularDiagram> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 100 * count + 100) throw std::runtime_error("could not sample enough singular knots");
    const Diagram& base = bases[rng() % bases.size()];
    if (base.component_count() != 1) continue;
    WalkPlan plan;
    plan.seed = rng();
    plan.steps = 12;
    plan.max_crossings = std::max(12, n + 4);
    Diagram d = random_walk(base, plan);
    if (d.crossing_count() < n) continue;
    std::vector<CrossingId> ids(d.crossing_count());
    for (int i = 0; i < d.crossing_count(); ++i) ids[i] = i + 1;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(n);
    out.emplace_back(std::move(d), std::move(ids));
  }
  return out;
}

}  // namespace knots
