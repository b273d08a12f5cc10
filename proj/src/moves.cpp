#include "knots/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "knots/errors.hpp"

namespace knots {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

namespace {

Side to_side(const Diagram& d, HalfEdge h) { return {d.edge_ref(h.edge), h.forward}; }

// Face and piece bookkeeping for sides, free loops included.
struct Layout {
  std::vector<Face> face_list;
  std::vector<int> face_of;   // by 2 * edge + (forward ? 0 : 1)
  std::vector<int> piece_of;  // by crossing id
  std::vector<int> loop_ordinal;
  int piece_count = 0;

  explicit Layout(const Diagram& d) : face_list(faces(d)), face_of(2 * d.edge_count(), -1) {
    for (int f = 0; f < static_cast<int>(face_list.size()); ++f)
      for (const auto& h : face_list[f]) face_of[2 * h.edge + (h.forward ? 0 : 1)] = f;
    const auto ps = pieces(d);
    piece_of.assign(d.crossing_count() + 1, -1);
    for (int i = 0; i < static_cast<int>(ps.size()); ++i)
      for (CrossingId c : ps[i]) piece_of[c] = i;
    piece_count = static_cast<int>(ps.size());
    loop_ordinal.assign(d.component_count(), -1);
    int k = 0;
    for (int c = 0; c < d.component_count(); ++c)
      if (d.is_free_loop(c)) loop_ordinal[c] = k++;
  }

  int face(const Diagram& d, Side s) const {
    if (d.is_free_loop(s.edge.component))
      return static_cast<int>(face_list.size()) + 2 * loop_ordinal[s.edge.component] + (s.forward ? 0 : 1);
    return face_of[2 * d.edge_id(s.edge) + (s.forward ? 0 : 1)];
  }

  int piece(const Diagram& d, Side s) const {
    if (d.is_free_loop(s.edge.component)) return piece_count + loop_ordinal[s.edge.component];
    return piece_of[d.pass({s.edge.component, s.edge.index}).crossing];
  }
};

std::vector<Side> all_sides(const Diagram& d) {
  std::vector<Side> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const int len = std::max(1, d.component_length(c));
    for (int i = 0; i < len; ++i) {
      out.push_back({{c, i}, true});
      out.push_back({{c, i}, false});
    }
  }
  return out;
}

bool edge_exists(const Diagram& d, EdgeRef e) {
  if (e.component < 0 || e.component >= d.component_count()) return false;
  const int len = d.component_length(e.component);
  return e.index >= 0 && e.index < std::max(1, len);
}

// Removes the listed passes and relabels.
Diagram remove_passes(const Diagram& d, const std::vector<PassRef>& gone) {
  GaussCode code;
  for (int c = 0; c < d.component_count(); ++c) {
    std::vector<Pass> kept;
    auto comp = d.component(c);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
      if (std::find(gone.begin(), gone.end(), PassRef{c, i}) == gone.end()) kept.push_back(comp[i]);
    code.components.push_back(std::move(kept));
  }
  return Diagram(code);
}

// Roles at the two ends of an edge: (tail, head).
std::pair<Role, Role> end_roles(const Diagram& d, int edge) {
  return {d.pass(d.tail(edge)).role, d.pass(d.head(edge)).role};
}

bool is_r2_bigon(const Diagram& d, const Face& f) {
  if (f.size() != 2 || f[0].edge == f[1].edge) return false;
  const CrossingId x = d.tail_dart(f[0].edge).crossing;
  const CrossingId y = d.head_dart(f[0].edge).crossing;
  if (x == y) return false;
  std::set<CrossingId> other{d.tail_dart(f[1].edge).crossing, d.head_dart(f[1].edge).crossing};
  if (other != std::set<CrossingId>{x, y}) return false;
  auto [a, b] = end_roles(d, f[0].edge);
  return a == b;
}

bool is_r3_triangle(const Diagram& d, const Face& f) {
  if (f.size() != 3) return false;
  std::set<CrossingId> corners;
  std::set<int> edges;
  int oo = 0, uu = 0, mixed = 0;
  for (const auto& h : f) {
    const CrossingId x = d.tail_dart(h.edge).crossing;
    const CrossingId y = d.head_dart(h.edge).crossing;
    if (x == y) return false;
    corners.insert(x);
    corners.insert(y);
    edges.insert(h.edge);
    auto [a, b] = end_roles(d, h.edge);
    if (a != b) {
      ++mixed;
    } else if (a == Role::Over) {
      ++oo;
    } else {
      ++uu;
    }
  }
  return corners.size() == 3 && edges.size() == 3 && oo == 1 && uu == 1 && mixed == 1;
}

void add_r2_pairs(std::vector<MoveSite>& out, Side a, Side b) {
  for (int v = 0; v < 2; ++v) out.push_back({MoveKind::R2Add, {a, b}, v});
}

void require_planar(const Diagram& d) {
  if (!is_planar(d)) throw NonPlanarError("moves need a planar diagram (genus 0 in every piece)");
}

std::vector<MoveSite> sites_of_kind(const Diagram& d, const Layout& lay, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1Add:
      for (int c = 0; c < d.component_count(); ++c) {
        const int len = std::max(1, d.component_length(c));
        for (int i = 0; i < len; ++i)
          for (int v = 0; v < 4; ++v) out.push_back({kind, {Side{{c, i}, true}}, v});
      }
      break;
    case MoveKind::R1Remove: {
      // An isolated curl bounds two monogons; both remove the same crossing.
      std::vector<bool> seen(d.crossing_count() + 1, false);
      for (const auto& f : lay.face_list) {
        if (f.size() != 1) continue;
        const CrossingId c = d.pass(d.head(f[0].edge)).crossing;
        if (!seen[c]) out.push_back({kind, {to_side(d, f[0])}, 0});
        seen[c] = true;
      }
      break;
    }
    case MoveKind::R2Remove:
      for (const auto& f : lay.face_list)
        if (is_r2_bigon(d, f)) out.push_back({kind, {to_side(d, f[0]), to_side(d, f[1])}, 0});
      break;
    case MoveKind::R3:
      for (const auto& f : lay.face_list)
        if (is_r3_triangle(d, f)) out.push_back({kind, {to_side(d, f[0]), to_side(d, f[1]), to_side(d, f[2])}, 0});
      break;
    case MoveKind::R2Add: {
      for (const auto& f : lay.face_list)
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i].edge != f[j].edge) add_r2_pairs(out, to_side(d, f[i]), to_side(d, f[j]));
      const auto sides = all_sides(d);
      for (std::size_t i = 0; i < sides.size(); ++i)
        for (std::size_t j = i + 1; j < sides.size(); ++j)
          if (lay.piece(d, sides[i]) != lay.piece(d, sides[j])) add_r2_pairs(out, sides[i], sides[j]);
      break;
    }
  }
  return out;
}

bool contains(const std::vector<MoveSite>& v, const MoveSite& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// Inserts `passes` into edge e (before pass e.index).
void insert_into(GaussCode& code, EdgeRef e, const std::vector<Pass>& passes) {
  auto& comp = code.components[e.component];
  comp.insert(comp.begin() + e.index, passes.begin(), passes.end());
}

int cross_sign(std::array<int, 2> over, std::array<int, 2> under) {
  const int z = over[0] * under[1] - over[1] * under[0];
  return z > 0 ? 1 : -1;
}

Diagram apply_r1_add(const Diagram& d, const MoveSite& s) {
  const CrossingId x = d.crossing_count() + 1;
  const Role first = (s.variant & 1) ? Role::Under : Role::Over;
  const int sign = (s.variant & 2) ? -1 : 1;
  GaussCode code = d.code();
  insert_into(code, s.anchor[0].edge, {Pass{x, first, sign}, Pass{x, opposite(first), sign}});
  return Diagram(code);
}

// Pushes a finger of strand 1 across strand 2 inside their common face.
// Locally the face is the strip 0 < y < 1 with strand 1 on y = 0 and
// strand 2 on y = 1; the finger crosses y = 1 at x = a and x = b > a,
// rising at the first of them met along strand 1.
Diagram apply_r2_add(const Diagram& d, const MoveSite& s) {
  const Side s1 = s.anchor[0];
  const Side s2 = s.anchor[1];
  const int dir1 = s1.forward ? 1 : -1;  // strand 1 runs along +x iff its face is above
  const int dir2 = s2.forward ? -1 : 1;  // strand 2 runs along -x iff its face is below
  const CrossingId a = d.crossing_count() + 1;
  const CrossingId b = d.crossing_count() + 2;
  const CrossingId rise = dir1 > 0 ? a : b;
  const CrossingId fall = dir1 > 0 ? b : a;
  const std::array<int, 2> along2{dir2, 0};
  const bool top1 = s.variant == 0;
  auto make = [&](CrossingId id, bool first_strand) {
    const std::array<int, 2> v1{0, id == rise ? 1 : -1};
    const int sign = top1 ? cross_sign(v1, along2) : cross_sign(along2, v1);
    const Role role = (first_strand == top1) ? Role::Over : Role::Under;
    return Pass{id, role, sign};
  };
  const std::vector<Pass> on1{make(rise, true), make(fall, true)};
  std::vector<Pass> on2{make(a, false), make(b, false)};
  if (dir2 < 0) std::swap(on2[0], on2[1]);
  GaussCode code = d.code();
  const EdgeRef e1 = s1.edge, e2 = s2.edge;
  // Insert at the later position first so indices stay valid.
  if (e1.component == e2.component && e1.index < e2.index) {
    insert_into(code, e2, on2);
    insert_into(code, e1, on1);
  } else {
    insert_into(code, e1, on1);
    insert_into(code, e2, on2);
  }
  return Diagram(code);
}

Diagram apply_r3(const Diagram& d, const MoveSite& s) {
  GaussCode code = d.code();
  for (const Side& side : s.anchor) {
    const int e = d.edge_id(side.edge);
    const PassRef t = d.tail(e), h = d.head(e);
    auto& comp = code.components[t.component];
    std::swap(comp[t.index], comp[h.index]);
  }
  return Diagram(code);
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const Diagram& d) {
  require_planar(d);
  const Layout lay(d);
  std::vector<MoveSite> out;
  for (int k = 0; k < kMoveKinds; ++k) {
    auto part = sites_of_kind(d, lay, static_cast<MoveKind>(k));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MoveSite> enumerate_sites(const Diagram& d, MoveKind kind) {
  require_planar(d);
  return sites_of_kind(d, Layout(d), kind);
}

Diagram apply(const Diagram& d, const MoveSite& s) {
  auto invalid = [&](const std::string& why) { return InvalidSite(std::string(to_string(s.kind)) + ": " + why); };
  for (const Side& side : s.anchor)
    if (!edge_exists(d, side.edge)) throw invalid("anchor edge does not exist");
  switch (s.kind) {
    case MoveKind::R1Add:
      if (s.anchor.size() != 1 || s.variant < 0 || s.variant > 3) throw invalid("malformed site");
      return apply_r1_add(d, s);
    case MoveKind::R2Add: {
      if (s.anchor.size() != 2 || s.variant < 0 || s.variant > 1) throw invalid("malformed site");
      if (s.anchor[0].edge == s.anchor[1].edge) throw invalid("both sides on one edge");
      require_planar(d);
      const Layout lay(d);
      const bool shared_face = lay.face(d, s.anchor[0]) == lay.face(d, s.anchor[1]);
      const bool apart = lay.piece(d, s.anchor[0]) != lay.piece(d, s.anchor[1]);
      if (!shared_face && !apart) throw invalid("sides do not share a face");
      return apply_r2_add(d, s);
    }
    case MoveKind::R1Remove:
    case MoveKind::R2Remove:
    case MoveKind::R3: {
      if (!contains(enumerate_sites(d, s.kind), s)) throw invalid("no such pattern at anchor");
      if (s.kind == MoveKind::R3) return apply_r3(d, s);
      std::vector<PassRef> gone;
      for (const Side& side : s.anchor) {
        const int e = d.edge_id(side.edge);
        gone.push_back(d.tail(e));
        gone.push_back(d.head(e));
      }
      return remove_passes(d, gone);
    }
  }
  throw invalid("unknown move kind");
}

Diagram crossing_change(const Diagram& d, CrossingId c) {
  if (!d.has_crossing(c)) throw UnknownCrossing("no crossing " + std::to_string(c));
  GaussCode code = d.code();
  for (auto& comp : code.components)
    for (auto& p : comp)
      if (p.crossing == c) {
        p.role = opposite(p.role);
        p.sign = -p.sign;
      }
  return Diagram(code);
}

Diagram smooth(const Diagram& d, CrossingId c) {
  if (!d.has_crossing(c)) throw UnknownCrossing("no crossing " + std::to_string(c));
  const PassRef p = d.over_pass(c);
  const PassRef q = d.under_pass(c);
  auto comp = [&](int i) { return std::vector<Pass>(d.component(i).begin(), d.component(i).end()); };
  // Passes strictly after `from`, cyclically, up to (not including) `to`.
  auto run = [&](const std::vector<Pass>& seq, int from, int to) {
    std::vector<Pass> out;
    const int len = static_cast<int>(seq.size());
    for (int i = (from + 1) % len; i != to; i = (i + 1) % len) out.push_back(seq[i]);
    return out;
  };
  GaussCode code = d.code();
  if (p.component == q.component) {
    // Arriving at either pass, the smoothed strand leaves along the other
    // pass's outgoing edge: the component splits in two.
    const auto seq = comp(p.component);
    code.components[p.component] = run(seq, q.index, p.index);
    code.components.push_back(run(seq, p.index, q.index));
  } else {
    const auto sp = comp(p.component);
    const auto sq = comp(q.component);
    std::vector<Pass> merged = run(sp, p.index, p.index);
    auto tail = run(sq, q.index, q.index);
    // run(seq, i, i) yields every pass except i, starting after i.
    merged.insert(merged.end(), tail.begin(), tail.end());
    const int keep = std::min(p.component, q.component);
    const int drop = std::max(p.component, q.component);
    code.components[keep] = std::move(merged);
    code.components.erase(code.components.begin() + drop);
  }
  return Diagram(code);
}

Diagram connected_sum(const Diagram& a, EdgeRef ea, const Diagram& b, EdgeRef eb) {
  if (!edge_exists(a, ea) || !edge_exists(b, eb)) throw IndexError("connected_sum: edge does not exist");
  const int shift = a.crossing_count();
  GaussCode bc = b.code();
  for (auto& comp : bc.components)
    for (auto& p : comp) p.crossing += shift;
  const auto& seq_b = bc.components[eb.component];
  std::vector<Pass> rotated;
  for (std::size_t i = 0; i < seq_b.size(); ++i) rotated.push_back(seq_b[(eb.index + i) % seq_b.size()]);
  GaussCode code = a.code();
  insert_into(code, ea, rotated);
  for (int c = 0; c < b.component_count(); ++c)
    if (c != eb.component) code.components.push_back(bc.components[c]);
  return Diagram(code);
}

Diagram connected_sum(const Diagram& a, const Diagram& b) { return connected_sum(a, {0, 0}, b, {0, 0}); }

Diagram band_sum(const Diagram& d, EdgeRef x, EdgeRef y) {
  if (!edge_exists(d, x) || !edge_exists(d, y)) throw IndexError("band_sum: edge does not exist");
  if (x.component == y.component) throw IndexError("band_sum joins two different components");
  if (!is_planar(d)) throw NonPlanarError("band_sum needs a planar diagram");
  const auto seq = d.component(y.component);
  std::vector<Pass> rotated;
  for (std::size_t i = 0; i < seq.size(); ++i) rotated.push_back(seq[(y.index + i) % seq.size()]);
  GaussCode code = d.code();
  insert_into(code, x, rotated);
  code.components.erase(code.components.begin() + y.component);
  Diagram out(code);
  if (!is_planar(out)) throw InvalidSite("band_sum: edges do not face each other across a common face");
  return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  const int shift = a.crossing_count();
  GaussCode code = a.code();
  for (auto comp : b.code().components) {
    for (auto& p : comp) p.crossing += shift;
    code.components.push_back(std::move(comp));
  }
  return Diagram(code);
}

std::vector<Diagram> walk_trace(const Diagram& d, const WalkPlan& plan) {
  if (std::none_of(plan.weights.begin(), plan.weights.end(), [](double w) { return w > 0; }) ||
      std::any_of(plan.weights.begin(), plan.weights.end(), [](double w) { return w < 0; }))
    throw std::invalid_argument("walk weights must be nonnegative with one positive");
  std::mt19937_64 rng(plan.seed);
  std::discrete_distribution<int> pick_kind(plan.weights.begin(), plan.weights.end());
  std::vector<Diagram> trace{d};
  trace.reserve(static_cast<std::size_t>(std::max(plan.steps, 0)) + 1);
  for (int step = 0; step < plan.steps; ++step) {
    const Diagram cur = trace.back();
    const auto kind = static_cast<MoveKind>(pick_kind(rng));
    const bool grows = kind == MoveKind::R1Add || kind == MoveKind::R2Add;
    const auto sites = grows && plan.max_crossings > 0 && cur.crossing_count() >= plan.max_crossings
                           ? std::vector<MoveSite>{}
                           : enumerate_sites(cur, kind);
    if (sites.empty()) {
      trace.push_back(cur);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    trace.push_back(apply(cur, sites[pick(rng)]));
  }
  return trace;
}

Diagram random_walk(const Diagram& d, const WalkPlan& plan) { return walk_trace(d, plan).back(); }

}  // namespace knots
