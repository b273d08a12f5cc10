#include "knots/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "knots/errors.hpp"

namespace knots {

Diagram::Diagram(const GaussCode& code) {
  validate(code);
  code_ = relabel_by_rank(code);
  const int n = code_.crossing_count();
  signs_.assign(n, 0);
  over_.assign(n, {});
  under_.assign(n, {});
  edge_offset_.assign(code_.components.size() + 1, 0);
  for (int c = 0; c < component_count(); ++c) {
    const auto& comp = code_.components[c];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      const Pass& p = comp[i];
      signs_[p.crossing - 1] = p.sign;
      (p.role == Role::Over ? over_ : under_)[p.crossing - 1] = PassRef{c, i};
    }
    edge_offset_[c + 1] = edge_offset_[c] + static_cast<int>(comp.size());
  }
}

Diagram Diagram::parse(std::string_view text) { return Diagram(parse_gauss(text)); }

int Diagram::free_loop_count() const {
  return static_cast<int>(std::count_if(code_.components.begin(), code_.components.end(),
                                        [](const auto& c) { return c.empty(); }));
}

std::span<const Pass> Diagram::component(int i) const {
  if (i < 0 || i >= component_count()) throw IndexError("component index " + std::to_string(i) + " out of range");
  return code_.components[i];
}

int Diagram::sign(CrossingId c) const {
  if (!has_crossing(c)) throw UnknownCrossing("no crossing " + std::to_string(c));
  return signs_[c - 1];
}

PassRef Diagram::over_pass(CrossingId c) const {
  if (!has_crossing(c)) throw UnknownCrossing("no crossing " + std::to_string(c));
  return over_[c - 1];
}

PassRef Diagram::under_pass(CrossingId c) const {
  if (!has_crossing(c)) throw UnknownCrossing("no crossing " + std::to_string(c));
  return under_[c - 1];
}

const Pass& Diagram::pass(PassRef p) const { return code_.components.at(p.component).at(p.index); }

PassRef Diagram::next(PassRef p) const {
  const int len = component_length(p.component);
  return {p.component, (p.index + 1) % len};
}

PassRef Diagram::prev(PassRef p) const {
  const int len = component_length(p.component);
  return {p.component, (p.index + len - 1) % len};
}

int Diagram::edge_id(EdgeRef e) const {
  if (e.component < 0 || e.component >= component_count() || e.index < 0 ||
      e.index >= component_length(e.component))
    throw IndexError("no edge (" + std::to_string(e.component) + ", " + std::to_string(e.index) + ")");
  return edge_offset_[e.component] + e.index;
}

EdgeRef Diagram::edge_ref(int edge) const {
  if (edge < 0 || edge >= edge_count()) throw IndexError("edge id out of range");
  auto it = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), edge);
  const int c = static_cast<int>(it - edge_offset_.begin()) - 1;
  return {c, edge - edge_offset_[c]};
}

PassRef Diagram::head(int edge) const {
  auto e = edge_ref(edge);
  return {e.component, e.index};
}

PassRef Diagram::tail(int edge) const { return prev(head(edge)); }

Dart Diagram::head_dart(int edge) const {
  const Pass& p = pass(head(edge));
  return {p.crossing, p.role == Role::Over ? DartSlot::OverIn : DartSlot::UnderIn};
}

Dart Diagram::tail_dart(int edge) const {
  const Pass& p = pass(tail(edge));
  return {p.crossing, p.role == Role::Over ? DartSlot::OverOut : DartSlot::UnderOut};
}

int Diagram::edge_at(Dart d) const {
  const bool over = d.slot == DartSlot::OverIn || d.slot == DartSlot::OverOut;
  const bool incoming = d.slot == DartSlot::OverIn || d.slot == DartSlot::UnderIn;
  PassRef p = over ? over_pass(d.crossing) : under_pass(d.crossing);
  if (!incoming) p = next(p);
  return edge_id({p.component, p.index});
}

std::array<DartSlot, 4> Diagram::rotation(CrossingId c) const {
  using enum DartSlot;
  if (sign(c) > 0) return {UnderIn, OverOut, UnderOut, OverIn};
  return {UnderIn, OverIn, UnderOut, OverOut};
}

Diagram build_diagram(const GaussCode& code) { return Diagram(code); }

GaussCode to_gauss(const Diagram& d) { return d.code(); }

namespace {

bool is_out(DartSlot s) { return s == DartSlot::UnderOut || s == DartSlot::OverOut; }

int half_index(HalfEdge h) { return 2 * h.edge + (h.forward ? 0 : 1); }

HalfEdge successor(const Diagram& d, HalfEdge h) {
  const Dart at = h.forward ? d.head_dart(h.edge) : d.tail_dart(h.edge);
  const auto rot = d.rotation(at.crossing);
  const int i = static_cast<int>(std::find(rot.begin(), rot.end(), at.slot) - rot.begin());
  const Dart out{at.crossing, rot[(i + 3) % 4]};
  return {d.edge_at(out), is_out(out.slot)};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Face> faces(const Diagram& d) {
  const int halves = 2 * d.edge_count();
  std::vector<char> used(halves, 0);
  std::vector<Face> out;
  for (int start = 0; start < halves; ++start) {
    if (used[start]) continue;
    Face f;
    HalfEdge h{start / 2, start % 2 == 0};
    while (!used[half_index(h)]) {
      used[half_index(h)] = 1;
      f.push_back(h);
      h = successor(d, h);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<CrossingId>> pieces(const Diagram& d) {
  const int n = d.crossing_count();
  UnionFind uf(n + 1);
  for (int e = 0; e < d.edge_count(); ++e) uf.unite(d.head_dart(e).crossing, d.tail_dart(e).crossing);
  std::vector<std::vector<CrossingId>> out;
  std::vector<int> slot(n + 1, -1);
  for (CrossingId c = 1; c <= n; ++c) {
    const int r = uf.find(c);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(c);
  }
  return out;
}

std::vector<int> genus(const Diagram& d) {
  const auto ps = pieces(d);
  std::vector<int> piece_of(d.crossing_count() + 1, 0);
  for (int i = 0; i < static_cast<int>(ps.size()); ++i)
    for (CrossingId c : ps[i]) piece_of[c] = i;
  std::vector<int> face_count(ps.size(), 0);
  for (const auto& f : faces(d)) ++face_count[piece_of[d.head_dart(f.front().edge).crossing]];
  std::vector<int> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const int v = static_cast<int>(ps[i].size());
    const int e = 2 * v;
    out.push_back((2 - v + e - face_count[i]) / 2);
  }
  out.insert(out.end(), d.free_loop_count(), 0);
  return out;
}

bool is_planar(const Diagram& d) {
  const auto g = genus(d);
  return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
}

Diagram mirror(const Diagram& d) {
  GaussCode code = d.code();
  for (auto& comp : code.components)
    for (auto& p : comp) {
      p.role = opposite(p.role);
      p.sign = -p.sign;
    }
  return Diagram(code);
}

Diagram reverse_all(const Diagram& d) {
  GaussCode code = d.code();
  for (auto& comp : code.components) std::reverse(comp.begin(), comp.end());
  return Diagram(code);
}

Diagram reverse_component(const Diagram& d, int component) {
  d.component(component);
  GaussCode code = d.code();
  auto& target = code.components[component];
  std::reverse(target.begin(), target.end());
  // A crossing between the reversed component and another one changes sign.
  std::vector<int> touches(d.crossing_count() + 1, 0);
  for (const auto& p : target) ++touches[p.crossing];
  for (auto& comp : code.components)
    for (auto& p : comp)
      if (touches[p.crossing] == 1) p.sign = -p.sign;
  return Diagram(code);
}

Diagram permute_components(const Diagram& d, std::span<const int> perm) {
  const int k = d.component_count();
  if (static_cast<int>(perm.size()) != k) throw IndexError("permutation size differs from component count");
  std::vector<char> hit(k, 0);
  for (int v : perm) {
    if (v < 0 || v >= k || hit[v]) throw IndexError("not a permutation of component indices");
    hit[v] = 1;
  }
  GaussCode code;
  for (int v : perm) code.components.push_back(d.code().components[v]);
  return Diagram(code);
}

std::vector<Pass> read_from(const Diagram& d, Basepoint p) {
  auto comp = d.component(p.component);
  const int len = static_cast<int>(comp.size());
  if (len == 0) {
    if (p.position != 0) throw IndexError("free loop basepoint position must be 0");
    return {};
  }
  if (p.position < 0 || p.position >= len) throw IndexError("basepoint position out of range");
  std::vector<Pass> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) out.push_back(comp[(p.position + i) % len]);
  return out;
}

bool same_up_to_relabeling(const Diagram& a, const Diagram& b) {
  return canonical(a.code()) == canonical(b.code());
}

}  // namespace knots
