#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Knot diagram with some crossings marked as rigid double points.
class SingularDiagram {
 public:
  // Throws NotAKnot unless `base` has one component, UnknownCrossing for a
  // marked id that is not a crossing. Duplicate marks are merged.
  SingularDiagram(Diagram base, std::vector<CrossingId> doubles);

  const Diagram& base() const { return base_; }
  const std::vector<CrossingId>& doubles() const { return doubles_; }

 private:
  Diagram base_;
  std::vector<CrossingId> doubles_;
};

// Cyclic word of 2n letters, each used twice, kept in canonical form:
// letters renamed 1..n by first occurrence, least such word over rotations.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  // Any labels; each must occur exactly twice (std::invalid_argument).
  static ChordDiagram from_word(std::span<const int> word);
  // Digits 1-9 then letters a-z, e.g. "1212", "123123".
  static ChordDiagram parse(std::string_view text);

  const std::vector<int>& word() const { return word_; }
  int chord_count() const { return static_cast<int>(word_.size() / 2); }
  // True if some chord has cyclically adjacent endpoints.
  bool has_isolated_chord() const;

  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::vector<int> word_;
};

std::string to_string(const ChordDiagram& c);

ChordDiagram sigma(const SingularDiagram& s);

// All 2^m resolutions; each double point becomes its positive or its
// negative crossing, `second` counts negative choices.
std::vector<std::pair<Diagram, int>> resolutions(const SingularDiagram& s);

using KnotInvariant = std::function<std::int64_t(const Diagram&)>;

// Alternating sum over resolutions: sum of (-1)^parity inv(resolution).
std::int64_t extend(const KnotInvariant& inv, const SingularDiagram& s);

using WeightSystem = std::map<ChordDiagram, std::int64_t>;

// Canonical n-chord diagrams, deduplicated and sorted.
std::vector<ChordDiagram> enumerate_chord_diagrams(int n);

// lambda vanishes on every n-chord diagram with an isolated chord.
bool check_1t(const WeightSystem& lambda, int n);

// For every chord A with a mobile endpoint m and every other chord B with
// endpoints q1, q2: l(m before q1) - l(m after q1) + l(m before q2) -
// l(m after q2) = 0.
bool check_4t(const WeightSystem& lambda, int n);

struct SymbolResult {
  WeightSystem values;
  std::map<ChordDiagram, int> samples;  // realizations seen per class
  bool consistent = true;
};

// Groups extend(inv, s) by sigma(s) over samples with exactly n doubles.
SymbolResult symbol(const KnotInvariant& inv, int n, std::span<const SingularDiagram> samples);

// Planar singular knot whose double points read `chords` along the knot.
// `seed` picks the starting rotation and the over/under data; crossings
// outside the double points appear only where the construction forces them.
SingularDiagram realize(const ChordDiagram& chords, std::uint64_t seed = 0);

// Random singular knots: walk a random knot from `bases` (needs enough
// crossings) and mark `n` random crossings.
std::vector<SingularDiagram> sample_singular_knots(std::span<const Diagram> bases, int n, int count,
                                                   std::uint64_t seed);

}  // namespace knots
