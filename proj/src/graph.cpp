#include "confsect/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace confsect {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

std::vector<int> bfs(const std::vector<std::vector<Incidence>>& inc, const std::vector<Edge>& edges, int src) {
  std::vector<int> dist(inc.size(), kUnreached);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& in : inc[v]) {
      int w = in.end == 0 ? edges[in.edge].head : edges[in.edge].tail;
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges, bool allow_degree2)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  if (names_.empty()) throw GraphError("graph has no vertices");
  for (int v = 0; v < vertex_count(); ++v) {
    if (!vertex_ids_.emplace(names_[v], v).second) throw GraphError("duplicate vertex id: " + names_[v]);
  }
  incidences_.assign(names_.size(), {});
  for (int e = 0; e < edge_count(); ++e) {
    const auto& ed = edges_[e];
    if (!edge_ids_.emplace(ed.name, e).second) throw GraphError("duplicate edge id: " + ed.name);
    if (ed.tail < 0 || ed.tail >= vertex_count() || ed.head < 0 || ed.head >= vertex_count()) {
      throw GraphError("edge " + ed.name + " has an unknown endpoint");
    }
    incidences_[ed.tail].push_back({e, 0});
    incidences_[ed.head].push_back({e, 1});
  }
  vdist_.reserve(names_.size());
  for (int v = 0; v < vertex_count(); ++v) vdist_.push_back(bfs(incidences_, edges_, v));
  for (int v = 0; v < vertex_count(); ++v) {
    if (vdist_[0][v] == kUnreached) throw GraphError("graph is disconnected (vertex " + names_[v] + ")");
  }
  if (!allow_degree2 && !is_circle_convention()) {
    for (int v = 0; v < vertex_count(); ++v) {
      if (degree(v) == 2) {
        throw GraphError("vertex " + names_[v] + " has degree 2; merge its edges or pass --suppress2");
      }
    }
  }
}

int Graph::vertex_index(const std::string& name) const {
  auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) throw GraphError("unknown vertex: " + name);
  return it->second;
}

int Graph::edge_index(const std::string& name) const {
  auto it = edge_ids_.find(name);
  if (it == edge_ids_.end()) throw GraphError("unknown edge: " + name);
  return it->second;
}

std::vector<int> Graph::branched_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (is_branched(v)) out.push_back(v);
  }
  return out;
}

bool Graph::is_circle_convention() const {
  return vertex_count() == 1 && edge_count() == 1 && edges_[0].is_loop();
}

int Graph::other_end(int e, int v) const {
  const auto& ed = edges_.at(e);
  if (ed.tail == v) return ed.head;
  if (ed.head == v) return ed.tail;
  throw GraphError("vertex " + names_.at(v) + " is not on edge " + ed.name);
}

Incidence Graph::step_toward(int a, int b) const {
  for (const auto& in : incidences_.at(a)) {
    int w = endpoint(in.edge, 1 - in.end);
    if (vdist_[w][b] + 1 == vdist_[a][b]) return in;
  }
  throw GraphError("no step from " + names_.at(a) + " toward " + names_.at(b));
}

Point Graph::normalize(Point p) const {
  if (p.is_edge()) {
    if (p.t == 0) return Point::at_vertex(edges_.at(p.id).tail);
    if (p.t == 1) return Point::at_vertex(edges_.at(p.id).head);
  }
  return p;
}

void Graph::check_point(const Point& p) const {
  if (p.is_vertex()) {
    if (p.id < 0 || p.id >= vertex_count()) throw GraphError("point references unknown vertex");
    return;
  }
  if (p.id < 0 || p.id >= edge_count()) throw GraphError("point references unknown edge");
  if (p.t <= 0 || p.t >= 1) throw GraphError("edge parameter must lie strictly between 0 and 1");
}

int euler_characteristic(const Graph& g) { return g.vertex_count() - g.edge_count(); }

namespace {

struct EndDistance {
  int vertex;
  Rational d;
};

std::vector<EndDistance> ends_of(const Graph& g, const Point& p) {
  if (p.is_vertex()) return {{p.id, 0}};
  const auto& e = g.edge(p.id);
  return {{e.tail, p.t}, {e.head, 1 - p.t}};
}

}  // namespace

Rational shortest_distance(const Graph& g, const Point& p, const Point& q) {
  if (p == q) return 0;
  Rational best = -1;
  if (p.is_edge() && q.is_edge() && p.id == q.id) best = abs(p.t - q.t);
  for (const auto& a : ends_of(g, p)) {
    for (const auto& b : ends_of(g, q)) {
      Rational d = a.d + g.vertex_distance(a.vertex, b.vertex) + b.d;
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

bool is_bridge(const Graph& g, int e) {
  const auto& ed = g.edge(e);
  if (ed.is_loop()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{ed.tail};
  seen[ed.tail] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& in : g.incidences(v)) {
      if (in.edge == e) continue;
      int w = g.endpoint(in.edge, 1 - in.end);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return !seen[ed.head];
}

std::set<int> maximal_subtree(const Graph& g) {
  std::set<int> tree;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& in : g.incidences(v)) {
      int w = g.endpoint(in.edge, 1 - in.end);
      if (!seen[w]) {
        seen[w] = 1;
        tree.insert(in.edge);
        queue.push_back(w);
      }
    }
  }
  return tree;
}

Graph suppress_degree2(const std::vector<std::string>& vertex_names, const std::vector<Edge>& edges) {
  std::vector<char> alive_v(vertex_names.size(), 1);
  std::vector<Edge> es = edges;
  std::vector<char> alive_e(es.size(), 1);
  auto incident = [&](int v) {
    std::vector<Incidence> out;
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
      if (!alive_e[e]) continue;
      if (es[e].tail == v) out.push_back({e, 0});
      if (es[e].head == v) out.push_back({e, 1});
    }
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < static_cast<int>(vertex_names.size()); ++v) {
      if (!alive_v[v]) continue;
      auto inc = incident(v);
      if (inc.size() != 2 || inc[0].edge == inc[1].edge) continue;
      // Splice e2 onto e1 so that e1 keeps its far endpoint and absorbs e2's.
      auto far = [&](const Incidence& in) { return in.end == 0 ? es[in.edge].head : es[in.edge].tail; };
      int a = far(inc[0]);
      int b = far(inc[1]);
      Edge merged{es[inc[0].edge].name + "+" + es[inc[1].edge].name, a, b};
      if (inc[0].end == 1) {
        merged.tail = a;
        merged.head = b;
      } else {
        merged.tail = b;
        merged.head = a;
        merged.name = es[inc[1].edge].name + "+" + es[inc[0].edge].name;
      }
      es[inc[0].edge] = merged;
      alive_e[inc[1].edge] = 0;
      alive_v[v] = 0;
      changed = true;
    }
  }
  std::vector<int> remap(vertex_names.size(), -1);
  std::vector<std::string> names;
  for (int v = 0; v < static_cast<int>(vertex_names.size()); ++v) {
    if (alive_v[v]) {
      remap[v] = static_cast<int>(names.size());
      names.push_back(vertex_names[v]);
    }
  }
  std::vector<Edge> out;
  for (int e = 0; e < static_cast<int>(es.size()); ++e) {
    if (alive_e[e]) out.push_back({es[e].name, remap[es[e].tail], remap[es[e].head]});
  }
  return Graph(std::move(names), std::move(out));
}

CoreReduction core_reduction(const Graph& g) {
  if (euler_characteristic(g) > 0) throw GraphError("graph is a tree; it has no core");
  int nv = g.vertex_count();
  std::vector<char> alive_v(nv, 1);
  std::vector<char> alive_e(g.edge_count(), 1);
  std::vector<int> degree(nv);
  for (int v = 0; v < nv; ++v) degree[v] = g.degree(v);
  // parent_of_vertex / parent_of_edge: the neighbor a removed leaf hung from.
  std::vector<int> parent_v(nv, -1);
  std::vector<int> parent_e(g.edge_count(), -1);
  std::deque<int> leaves;
  for (int v = 0; v < nv; ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    int u = leaves.front();
    leaves.pop_front();
    if (!alive_v[u] || degree[u] != 1) continue;
    for (const auto& in : g.incidences(u)) {
      if (!alive_e[in.edge]) continue;
      int w = g.endpoint(in.edge, 1 - in.end);
      alive_e[in.edge] = 0;
      alive_v[u] = 0;
      parent_v[u] = w;
      parent_e[in.edge] = w;
      --degree[w];
      --degree[u];
      if (degree[w] == 1) leaves.push_back(w);
      break;
    }
  }
  auto attach = [&](int v) {
    while (!alive_v[v]) v = parent_v[v];
    return v;
  };
  CoreReduction out;
  for (int v = 0; v < nv; ++v) {
    if (!alive_v[v]) out.collapsed[g.vertex_name(v)] = g.vertex_name(attach(v));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!alive_e[e]) out.collapsed[g.edge(e).name] = g.vertex_name(attach(parent_e[e]));
  }
  std::vector<int> remap(nv, -1);
  std::vector<std::string> names;
  for (int v = 0; v < nv; ++v) {
    if (alive_v[v]) {
      remap[v] = static_cast<int>(names.size());
      names.push_back(g.vertex_name(v));
    }
  }
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (alive_e[e]) edges.push_back({g.edge(e).name, remap[g.edge(e).tail], remap[g.edge(e).head]});
  }
  out.core = suppress_degree2(names, edges);
  return out;
}

CoreClass classify_core(const Graph& g) {
  if (g.is_circle_convention()) return CoreClass::circle;
  int loops = 0;
  for (const auto& e : g.edges()) loops += e.is_loop() ? 1 : 0;
  if (g.vertex_count() == 1 && g.edge_count() == 2 && loops == 2) return CoreClass::infinity;
  if (g.vertex_count() == 2 && g.edge_count() == 3 && g.degree(0) == 3 && g.degree(1) == 3) {
    if (loops == 0) return CoreClass::theta;
    if (loops == 2) {
      std::set<int> loop_vertices;
      for (const auto& e : g.edges()) {
        if (e.is_loop()) loop_vertices.insert(e.tail);
      }
      if (loop_vertices.size() == 2) return CoreClass::dumbbell;
    }
  }
  return CoreClass::other;
}

const char* to_string(CoreClass c) {
  switch (c) {
    case CoreClass::circle: return "circle";
    case CoreClass::infinity: return "infinity";
    case CoreClass::theta: return "theta";
    case CoreClass::dumbbell: return "dumbbell";
    case CoreClass::other: return "other";
  }
  return "other";
}

}  // namespace confsect
