#include "confsect/pairs.hpp"

#include <algorithm>

namespace confsect {

namespace {

struct Mark {
  Rational t;
  int token;  // 1-based
};

// Tokens on the closed edge e in positive order; a loop vertex token shows up at both ends.
std::vector<Mark> closed_edge_marks(const Graph& g, const Configuration& x, int e) {
  const auto& ed = g.edge(e);
  std::vector<Mark> marks;
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    const auto& p = x[k];
    if (p.is_edge()) {
      if (p.id == e) marks.push_back({p.t, k + 1});
    } else {
      if (p.id == ed.tail) marks.push_back({0, k + 1});
      if (p.id == ed.head) marks.push_back({1, k + 1});
    }
  }
  std::sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) { return a.t < b.t; });
  return marks;
}

}  // namespace

DistinguishedPair make_pair_on(int i, int j, OrientedEdge e) {
  if (i == j) throw std::invalid_argument("pair indices must differ");
  return e.forward ? DistinguishedPair{i, j, e.edge} : DistinguishedPair{j, i, e.edge};
}

std::string to_string(const Graph& g, const DistinguishedPair& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")@" + g.edge(p.edge).name;
}

PairVerdict check_pairs(const std::vector<DistinguishedPair>& pairs) {
  auto show = [](const DistinguishedPair& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const auto& p = pairs[a];
      const auto& q = pairs[b];
      if (a < b && p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j) {
        return {false, "pairs " + show(p) + " and " + show(q) + " share no index"};
      }
      // In positive orientation (k,i) on the reversed edge reads (i,k); both
      // orientations reduce to the same test.
      if (p.edge == q.edge && q.j == p.i && q.i != p.j) {
        return {false, "pairs " + show(p) + " and " + show(q) + " chain through one index on one edge"};
      }
    }
  }
  return {};
}

NodeComponents node_components(const Graph& g, const Skeleton& s) {
  NodeComponents out;
  out.reserve(s.nodes.size());
  for (const auto& f : s.nodes) out.push_back(complement_components(g, realize_vertex(g, f)));
  return out;
}

std::vector<PairGroup> pair_groups(const Graph& g, const Skeleton& s, const NodeComponents& comps) {
  std::map<DistinguishedPair, std::vector<Witness>> by_key;
  if (g.is_circle_convention()) return {};
  std::vector<char> bridge(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) bridge[e] = is_bridge(g, e);
  for (int node = 0; node < static_cast<int>(s.nodes.size()); ++node) {
    Configuration x = realize_vertex(g, s.nodes[node]);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (bridge[e]) continue;
      auto marks = closed_edge_marks(g, x, e);
      for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
        if (marks[k].token == marks[k + 1].token) continue;
        Point mid = Point::on_edge(e, midpoint(marks[k].t, marks[k + 1].t));
        by_key[{marks[k].token, marks[k + 1].token, e}].push_back({node, component_index(comps[node], mid)});
      }
    }
  }
  std::vector<PairGroup> out;
  for (auto& [key, w] : by_key) out.push_back({key, std::move(w)});
  return out;
}

std::vector<std::pair<int, int>> incompatible_groups(const std::vector<PairGroup>& groups) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(groups.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(groups.size()); ++b) {
      if (!check_pairs({groups[a].key, groups[b].key}).consistent) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<DeadEnd> dead_ends(const Graph& g, const Skeleton& s, const NodeComponents& comps) {
  std::vector<DeadEnd> out;
  for (int node = 0; node < static_cast<int>(s.nodes.size()); ++node) {
    Configuration x = realize_vertex(g, s.nodes[node]);
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      auto marks = closed_edge_marks(g, x, e);
      if (marks.empty()) continue;
      if (g.is_free(ed.tail) && marks.front().t > 0 && marks.front().t < 1) {
        out.push_back({node, component_index(comps[node], Point::at_vertex(ed.tail)), marks.front().token, ed.tail});
      }
      if (g.is_free(ed.head) && marks.back().t < 1 && marks.back().t > 0) {
        out.push_back({node, component_index(comps[node], Point::at_vertex(ed.head)), marks.back().token, ed.head});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DeadEnd& a, const DeadEnd& b) {
    return std::tie(a.node, a.value, a.token) < std::tie(b.node, b.value, b.token);
  });
  return out;
}

Chaser::Chaser(const Graph& g, const Skeleton& s, const std::vector<EdgeRelations>& rel, const NodeComponents& comps)
    : g_(g), s_(s), rel_(rel), comps_(comps) {
  for (const auto& f : s.nodes) configs_.push_back(realize_vertex(g, f));
}

int Chaser::find_edge(int node, OrientedEdge oe, int token, bool node_is_minus) const {
  for (int k : s_.incident[node]) {
    const auto& se = s_.edges[k];
    if ((node_is_minus ? se.minus : se.plus) != node) continue;
    if (se.face.moving[0].first == oe && se.face.moving[0].second == token) return k;
  }
  return -1;
}

ChaseResult Chaser::chase(int node, int token, int value) {
  const auto& x = configs_.at(node);
  const auto& comp = comps_.at(node).at(value);
  const Point& pos = x.at(token - 1);
  if (!borders(g_, comp, pos)) throw std::invalid_argument("component does not border the chasing token");
  if (!is_simply_connected(g_, comp, pos)) throw std::invalid_argument("component plus token contains a cycle");
  return run(node, token, value, 0);
}

ChaseResult Chaser::run(int node, int token, int value, int depth) {
  auto key = std::make_tuple(node, token, value);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (depth > 4 * static_cast<int>(s_.nodes.size())) throw std::logic_error("chase did not terminate");
  const auto& x = configs_[node];
  const auto& comp = comps_[node][value];
  const Point& pos = x[token - 1];
  ChaseResult out;
  if (comp.is_interval()) {
    const auto& piece = comp.pieces[0];
    auto marks = closed_edge_marks(g_, x, piece.edge);
    int lo = 0, hi = 0;
    for (const auto& m : marks) {
      if (m.t == piece.lo) lo = m.token;
      if (m.t == piece.hi) hi = m.token;
    }
    if (is_bridge(g_, piece.edge) || lo == hi) {
      ++out.bridge_intervals;
    } else {
      out.pairs.insert({lo, hi, piece.edge});
    }
  } else if (pos.is_edge()) {
    // The side of the token's edge lying in comp runs to a vertex w.
    const auto& ed = g_.edge(pos.id);
    bool toward_head = false;
    for (const auto& piece : comp.pieces) {
      if (piece.edge == pos.id && piece.lo == pos.t) toward_head = true;
    }
    int w = toward_head ? ed.head : ed.tail;
    if (g_.is_free(w)) {
      ++out.dead_ends;
    } else {
      OrientedEdge oe{pos.id, toward_head};
      int k = find_edge(node, oe, token, true);
      if (k < 0) throw std::logic_error("no skeleton move toward the vertex");
      int plus = s_.edges[k].plus;
      for (int y : rel_[k].forward.rows[value]) {
        auto sub = run(plus, token, y, depth + 1);
        out.pairs.insert(sub.pairs.begin(), sub.pairs.end());
        out.bridge_intervals += sub.bridge_intervals;
        out.dead_ends += sub.dead_ends;
      }
    }
  } else {
    int w = pos.id;
    std::vector<Incidence> into;
    for (const auto& in : g_.incidences(w)) {
      for (const auto& piece : comp.pieces) {
        if (piece.edge == in.edge && (in.end == 0 ? piece.lo == 0 : piece.hi == 1)) into.push_back(in);
      }
    }
    if (into.size() != 1) throw std::logic_error("component meets the vertex token along several edge-ends");
    OrientedEdge oe{into[0].edge, into[0].end == 1};
    int k = find_edge(node, oe, token, false);
    if (k < 0) throw std::logic_error("no skeleton move out of the vertex");
    const auto& row = rel_[k].backward.rows[value];
    if (row.size() != 1) throw std::logic_error("departure row is not a single component");
    auto sub = run(s_.edges[k].minus, token, row[0], depth + 1);
    out = sub;
  }
  memo_[key] = out;
  return out;
}

}  // namespace confsect
