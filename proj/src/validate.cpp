#include "confsect/search.hpp"

#include <algorithm>

// Deliberately shares nothing with the propagator beyond the skeleton and the
// transition tables.

namespace confsect {

namespace {

// Token (1-based) sitting at parameter t of the closed edge e, or 0.
int token_at(const Graph& g, const Configuration& x, int e, const Rational& t) {
  const auto& ed = g.edge(e);
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    const auto& p = x[k];
    if (p.is_edge() && p.id == e && p.t == t) return k + 1;
    if (p.is_vertex() && ((t == 0 && p.id == ed.tail) || (t == 1 && p.id == ed.head))) return k + 1;
  }
  return 0;
}

std::optional<DistinguishedPair> pair_of(const Graph& g, const Configuration& x, const Component& label) {
  if (!label.is_interval() || g.is_circle_convention()) return std::nullopt;
  const auto& piece = label.pieces[0];
  if (is_bridge(g, piece.edge)) return std::nullopt;
  int i = token_at(g, x, piece.edge, piece.lo);
  int j = token_at(g, x, piece.edge, piece.hi);
  if (i == 0 || j == 0 || i == j) return std::nullopt;
  return DistinguishedPair{i, j, piece.edge};
}

}  // namespace

std::vector<DistinguishedPair> extract_distinguished_pairs(const Graph& g, int n, const Labeling& l) {
  Skeleton s = one_skeleton(g, n);
  std::set<DistinguishedPair> out;
  for (const auto& [id, label] : l) {
    auto it = s.index.find(id);
    if (it == s.index.end()) continue;
    if (auto p = pair_of(g, realize_vertex(g, s.nodes[it->second]), label)) out.insert(*p);
  }
  return {out.begin(), out.end()};
}

bool validate_labeling(const Graph& g, int n, const Labeling& l, bool pairs) {
  Skeleton s = one_skeleton(g, n);
  if (l.size() != s.nodes.size()) return false;
  std::vector<Configuration> xs;
  for (std::size_t u = 0; u < s.nodes.size(); ++u) {
    auto it = l.find(s.node_ids[u]);
    if (it == l.end()) return false;
    xs.push_back(realize_vertex(g, s.nodes[u]));
    auto comps = complement_components(g, xs.back());
    if (std::find(comps.begin(), comps.end(), it->second) == comps.end()) return false;
  }
  for (const auto& se : s.edges) {
    auto rel = skeleton_edge_relation(g, se.face, Direction::into_vertex);
    const auto& from = l.at(s.node_ids[se.minus]);
    const auto& to = l.at(s.node_ids[se.plus]);
    auto a = std::find(rel.sources.begin(), rel.sources.end(), from) - rel.sources.begin();
    auto b = std::find(rel.targets.begin(), rel.targets.end(), to) - rel.targets.begin();
    if (a == static_cast<long>(rel.sources.size()) || b == static_cast<long>(rel.targets.size())) return false;
    const auto& row = rel.rows[a];
    if (std::find(row.begin(), row.end(), static_cast<int>(b)) == row.end()) return false;
  }
  if (!pairs) return true;
  auto found = extract_distinguished_pairs(g, n, l);
  if (!check_pairs(found).consistent) return false;
  std::set<DistinguishedPair> known(found.begin(), found.end());
  for (std::size_t u = 0; u < s.nodes.size(); ++u) {
    const auto& x = xs[u];
    const auto& label = l.at(s.node_ids[u]);
    // Every configuration meeting (a)-(c) for a known pair must carry it.
    for (const auto& key : known) {
      const auto& pi = x[key.i - 1];
      const auto& pj = x[key.j - 1];
      const auto& ed = g.edge(key.edge);
      auto param = [&](const Point& p, bool first) -> std::optional<Rational> {
        if (p.is_edge()) return p.id == key.edge ? std::optional<Rational>(p.t) : std::nullopt;
        if (ed.is_loop() && p.id == ed.tail) return Rational(first ? 0 : 1);
        if (p.id == ed.tail) return Rational(0);
        if (p.id == ed.head) return Rational(1);
        return std::nullopt;
      };
      auto ti = param(pi, true), tj = param(pj, false);
      if (!ti || !tj || *ti >= *tj) continue;
      bool clear = true;
      for (int k = 0; k < static_cast<int>(x.size()); ++k) {
        if (k == key.i - 1 || k == key.j - 1) continue;
        if (x[k].is_edge() && x[k].id == key.edge && *ti < x[k].t && x[k].t < *tj) clear = false;
      }
      if (!clear) continue;
      Component want{{Piece{key.edge, *ti, *tj}}, {}};
      if (label != want) return false;
    }
    // A token alone in front of a free vertex never has the value beyond it.
    for (int v : label.vertices) {
      if (!g.is_free(v)) continue;
      int e = g.incidences(v)[0].edge;
      for (const auto& p : x) {
        if (p.is_edge() && p.id == e) return false;
      }
    }
  }
  return true;
}

}  // namespace confsect
