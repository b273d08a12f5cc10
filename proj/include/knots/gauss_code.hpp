#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knots {

using CrossingId = int;

enum class Role : std::uint8_t { Over, Under };

constexpr Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

// One passage of a component through a crossing.
struct Pass {
  CrossingId crossing = 0;
  Role role = Role::Over;
  int sign = 1;

  friend bool operator==(const Pass&, const Pass&) = default;
};

// Signed oriented Gauss code: one pass sequence per component. An empty
// sequence is a crossing-free circle.
struct GaussCode {
  std::vector<std::vector<Pass>> components;

  int crossing_count() const;
  int component_count() const { return static_cast<int>(components.size()); }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Text form: passes `[OU]<id>[+-]` separated by whitespace, components
// separated by `;`, an empty component written `()`.
GaussCode parse_gauss(std::string_view text);
std::string to_string(const GaussCode& code);
std::string to_string(const Pass& pass);

// Throws ConsistencyError unless every crossing id occurs exactly twice,
// once Over and once Under, with equal signs, and ids are positive.
void validate(const GaussCode& code);

// Relabels ids to 1..n keeping their relative order.
GaussCode relabel_by_rank(const GaussCode& code);

// Relabels ids to 1..n in order of first occurrence (components in order).
// Two codes are equal up to relabeling iff their canonical forms are equal.
GaussCode canonical(const GaussCode& code);

}  // namespace knots
