#include "knots/colorings.hpp"

#include <stdexcept>

namespace knots {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

// Rank mod p; pivot is the first nonzero entry, rows scanned by index.
int rank_mod(std::vector<std::vector<int>> m, int cols, int p) {
  auto inverse = [p](int a) {
    int r = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = static_cast<int>(1LL * r * base % p);
      base = static_cast<int>(1LL * base * base % p);
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const int inv = inverse(m[rank][col]);
    for (auto& x : m[rank]) x = static_cast<int>(1LL * x * inv % p);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const int f = m[r][col];
      for (int k = 0; k < cols; ++k) m[r][k] = static_cast<int>(((m[r][k] - 1LL * f * m[rank][k]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ArcSet arcs(const Diagram& d) {
  ArcSet out;
  out.relations.resize(d.crossing_count());
  out.free_loop_arc.assign(d.component_count(), -1);
  for (int c = 0; c < d.component_count(); ++c) {
    auto comp = d.component(c);
    const int len = static_cast<int>(comp.size());
    std::vector<int> arc(len, -1);
    int first_under = -1;
    for (int i = 0; i < len && first_under < 0; ++i)
      if (comp[i].role == Role::Under) first_under = i;
    if (first_under < 0) {
      const int a = out.count++;
      arc.assign(len, a);
      if (len == 0) out.free_loop_arc[c] = a;
    } else {
      // Walk once around, starting just after the first undercrossing and
      // ending on it; each undercrossing closes one arc and opens the next.
      const int first_arc = out.count++;
      int current = first_arc;
      for (int step = 1; step <= len; ++step) {
        const int i = (first_under + step) % len;
        if (comp[i].role == Role::Over) {
          arc[i] = current;
          continue;
        }
        const int next = step == len ? first_arc : out.count++;
        auto& rel = out.relations[comp[i].crossing - 1];
        rel.under_in = current;
        rel.under_out = next;
        arc[i] = next;
        current = next;
      }
    }
    out.arc_of.push_back(std::move(arc));
  }
  for (CrossingId x = 1; x <= d.crossing_count(); ++x) {
    const PassRef o = d.over_pass(x);
    out.relations[x - 1].crossing = x;
    out.relations[x - 1].over = out.arc_of[o.component][o.index];
  }
  return out;
}

ColoringCount count_colorings(const Diagram& d, int p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("coloring modulus must be an odd prime");
  const ArcSet as = arcs(d);
  std::vector<std::vector<int>> rows;
  for (const auto& rel : as.relations) {
    std::vector<int> row(as.count, 0);
    row[rel.over] = (row[rel.over] + 2) % p;
    row[rel.under_in] = (row[rel.under_in] + p - 1) % p;
    row[rel.under_out] = (row[rel.under_out] + p - 1) % p;
    rows.push_back(std::move(row));
  }
  ColoringCount out;
  out.p = p;
  out.dimension = as.count - rank_mod(std::move(rows), as.count, p);
  std::uint64_t total = 1;
  for (int i = 0; i < out.dimension; ++i)
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(p), &total))
      throw std::overflow_error("coloring count overflows 64 bits");
  out.total = total;
  out.proper = total - static_cast<std::uint64_t>(p);
  return out;
}

bool is_colorable(const Diagram& d, int p) { return count_colorings(d, p).proper > 0; }

}  // namespace knots
