#include "confsect/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace confsect {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool Component::contains(const Point& p) const {
  if (p.is_vertex()) return std::binary_search(vertices.begin(), vertices.end(), p.id);
  for (const auto& piece : pieces) {
    if (piece.edge == p.id && piece.lo < p.t && p.t < piece.hi) return true;
  }
  return false;
}

void Component::canonicalize() {
  std::sort(pieces.begin(), pieces.end());
  std::sort(vertices.begin(), vertices.end());
}

void check_configuration(const Graph& g, const Configuration& x) {
  for (const auto& p : x) g.check_point(p);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) throw GraphError("configuration has two tokens at the same point");
    }
  }
}

std::vector<Component> complement_components(const Graph& g, const Configuration& x) {
  std::vector<char> occupied(g.vertex_count(), 0);
  std::vector<std::vector<Rational>> cuts(g.edge_count());
  for (const auto& p : x) {
    if (p.is_vertex()) {
      occupied[p.id] = 1;
    } else {
      cuts[p.id].push_back(p.t);
    }
  }
  std::vector<Piece> pieces;
  std::vector<int> first_piece(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto& c = cuts[e];
    std::sort(c.begin(), c.end());
    first_piece[e] = static_cast<int>(pieces.size());
    Rational lo = 0;
    for (const auto& t : c) {
      pieces.push_back({e, lo, t});
      lo = t;
    }
    pieces.push_back({e, lo, 1});
  }
  int np = static_cast<int>(pieces.size());
  DisjointSets sets(np + g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int last = (e + 1 < g.edge_count() ? first_piece[e + 1] : np) - 1;
    const auto& ed = g.edge(e);
    if (!occupied[ed.tail]) sets.join(first_piece[e], np + ed.tail);
    if (!occupied[ed.head]) sets.join(last, np + ed.head);
  }
  std::map<int, Component> by_root;
  for (int i = 0; i < np; ++i) by_root[sets.find(i)].pieces.push_back(pieces[i]);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!occupied[v]) by_root[sets.find(np + v)].vertices.push_back(v);
  }
  std::vector<Component> out;
  out.reserve(by_root.size());
  for (auto& [root, comp] : by_root) {
    comp.canonicalize();
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int component_index(const std::vector<Component>& comps, const Point& p) {
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    if (comps[i].contains(p)) return i;
  }
  throw GraphError("point is occupied by a token");
}

const Component& component_of(const std::vector<Component>& comps, const Point& p) {
  return comps[component_index(comps, p)];
}

bool borders(const Graph& g, const Component& c, const Point& q) {
  if (q.is_vertex()) {
    if (c.contains(q)) return true;
    for (const auto& piece : c.pieces) {
      const auto& e = g.edge(piece.edge);
      if (piece.lo == 0 && e.tail == q.id) return true;
      if (piece.hi == 1 && e.head == q.id) return true;
    }
    return false;
  }
  for (const auto& piece : c.pieces) {
    if (piece.edge == q.id && piece.lo <= q.t && q.t <= piece.hi) return true;
  }
  return false;
}

bool is_simply_connected(const Graph& g, const Component& c, const std::optional<Point>& extra) {
  // Cycle rank of the closure graph: nodes are vertices, the extra point and
  // loose piece ends; every piece is one edge.
  long nodes = static_cast<long>(c.vertices.size());
  bool extra_node = extra.has_value() && !c.contains(*extra);
  if (extra_node) ++nodes;
  auto attached = [&](const Piece& piece, int side) {
    const auto& e = g.edge(piece.edge);
    const Rational& t = side == 0 ? piece.lo : piece.hi;
    if (t == 0 && c.contains(Point::at_vertex(e.tail))) return true;
    if (t == 1 && c.contains(Point::at_vertex(e.head))) return true;
    if (!extra_node) return false;
    if (extra->is_vertex()) {
      return (t == 0 && e.tail == extra->id) || (t == 1 && e.head == extra->id);
    }
    return extra->id == piece.edge && extra->t == t;
  };
  for (const auto& piece : c.pieces) {
    for (int side = 0; side < 2; ++side) {
      if (!attached(piece, side)) ++nodes;
    }
  }
  long rank = static_cast<long>(c.pieces.size()) - nodes + 1;
  return rank == 0;
}

Point point_along(const Graph& g, const Point& p, const Point& q, const Rational& s) {
  if (s == 0) return p;
  Rational total = shortest_distance(g, p, q);
  if (s > total) throw GraphError("walk longer than the distance to the target");
  if (p.is_edge() && q.is_edge() && p.id == q.id && abs(p.t - q.t) == total) {
    Rational t = p.t < q.t ? Rational(p.t + s) : Rational(p.t - s);
    return g.normalize(Point::on_edge(p.id, t));
  }
  // Pick exit end of p and entry end of q realizing the distance.
  struct End {
    int vertex;
    int end;
    Rational d;
  };
  auto ends = [&](const Point& a) {
    std::vector<End> out;
    if (a.is_vertex()) {
      out.push_back({a.id, -1, 0});
    } else {
      out.push_back({g.edge(a.id).tail, 0, a.t});
      out.push_back({g.edge(a.id).head, 1, 1 - a.t});
    }
    return out;
  };
  End best_a{}, best_b{};
  Rational best = -1;
  for (const auto& a : ends(p)) {
    for (const auto& b : ends(q)) {
      Rational d = a.d + g.vertex_distance(a.vertex, b.vertex) + b.d;
      if (best < 0 || d < best) {
        best = d;
        best_a = a;
        best_b = b;
      }
    }
  }
  Rational left = s;
  if (left <= best_a.d) {
    Rational t = best_a.end == 0 ? Rational(p.t - left) : Rational(p.t + left);
    return g.normalize(Point::on_edge(p.id, t));
  }
  left -= best_a.d;
  int v = best_a.vertex;
  while (v != best_b.vertex) {
    if (left <= 1) {
      Incidence in = g.step_toward(v, best_b.vertex);
      Rational t = in.end == 0 ? left : Rational(1 - left);
      return g.normalize(Point::on_edge(in.edge, t));
    }
    Incidence in = g.step_toward(v, best_b.vertex);
    v = g.endpoint(in.edge, 1 - in.end);
    left -= 1;
  }
  if (left == 0) return Point::at_vertex(v);
  Rational t = best_b.end == 0 ? left : Rational(1 - left);
  return g.normalize(Point::on_edge(q.id, t));
}

}  // namespace confsect
