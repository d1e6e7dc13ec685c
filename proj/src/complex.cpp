#include "confsect/complex.hpp"

#include "confsect/geometry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace confsect {

int Face::token_count() const {
  int count = static_cast<int>(moving.size());
  for (const auto& tuple : on_edge) count += static_cast<int>(tuple.size());
  for (int v : at_vertex) count += v != 0 ? 1 : 0;
  return count;
}

std::string Face::id(const Graph& g) const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ';';
    first = false;
  };
  for (int e = 0; e < static_cast<int>(on_edge.size()); ++e) {
    if (on_edge[e].empty()) continue;
    sep();
    out << g.edge(e).name << '(';
    for (std::size_t i = 0; i < on_edge[e].size(); ++i) out << (i ? "," : "") << on_edge[e][i];
    out << ')';
  }
  for (int v = 0; v < static_cast<int>(at_vertex.size()); ++v) {
    if (at_vertex[v] == 0) continue;
    sep();
    out << '@' << g.vertex_name(v) << ':' << at_vertex[v];
  }
  for (const auto& [oe, index] : moving) {
    sep();
    out << g.edge(oe.edge).name << (oe.forward ? '+' : '-') << ':' << index;
  }
  return out.str();
}

Face empty_face(const Graph& g) {
  Face f;
  f.on_edge.assign(g.edge_count(), {});
  f.at_vertex.assign(g.vertex_count(), 0);
  return f;
}

void check_face(const Graph& g, const Face& f, int n) {
  if (static_cast<int>(f.on_edge.size()) != g.edge_count() || static_cast<int>(f.at_vertex.size()) != g.vertex_count()) {
    throw GraphError("face does not match the graph");
  }
  std::vector<int> seen(n + 1, 0);
  auto mark = [&](int i) {
    if (i < 1 || i > n || seen[i]++) throw GraphError("face indices must be a permutation of 1..n");
  };
  for (const auto& tuple : f.on_edge) {
    for (int i : tuple) mark(i);
  }
  std::vector<int> used(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f.at_vertex[v] == 0) continue;
    if (!g.is_branched(v)) throw GraphError("token on an unbranched vertex");
    mark(f.at_vertex[v]);
    ++used[v];
  }
  for (const auto& [oe, i] : f.moving) {
    int v = oe.head(g);
    if (!g.is_branched(v)) throw GraphError("mover toward an unbranched vertex");
    mark(i);
    ++used[v];
  }
  for (int c : used) {
    if (c > 1) throw GraphError("two slots claim the same vertex");
  }
  for (int i = 1; i <= n; ++i) {
    if (!seen[i]) throw GraphError("face is missing a token index");
  }
  if (!std::is_sorted(f.moving.begin(), f.moving.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; })) {
    throw GraphError("moving slots out of order");
  }
}

namespace {

struct Slot {
  int vertex = -1;  // F(v) when mover is unset
  bool is_mover = false;
  OrientedEdge oe;
};

void distribute(const Graph& g, const Face& base, std::vector<int> rest, std::vector<Face>& out) {
  int edges = g.edge_count();
  int m = static_cast<int>(rest.size());
  std::sort(rest.begin(), rest.end());
  // Compositions of m into `edges` parts, enumerated with a counter vector.
  std::vector<int> parts(edges, 0);
  std::vector<std::vector<int>> compositions;
  auto rec = [&](auto&& self, int e, int left) -> void {
    if (e == edges - 1) {
      parts[e] = left;
      compositions.push_back(parts);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      parts[e] = c;
      self(self, e + 1, left - c);
    }
  };
  rec(rec, 0, m);
  do {
    for (const auto& comp : compositions) {
      Face f = base;
      int pos = 0;
      for (int e = 0; e < edges; ++e) {
        for (int c = 0; c < comp[e]; ++c) f.on_edge[e].push_back(rest[pos++]);
      }
      out.push_back(std::move(f));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

std::vector<Face> enumerate_faces(const Graph& g, int n, int k) {
  if (n < 1) throw GraphError("need at least one token");
  if (g.is_circle_convention()) throw GraphError("the cube complex is not defined for the one-loop circle graph");
  std::vector<Face> out;
  auto branched = g.branched_vertices();
  std::vector<std::vector<Slot>> options;
  for (int v : branched) {
    std::vector<Slot> opts;
    opts.push_back(Slot{v, false, {}});
    for (const auto& in : g.incidences(v)) opts.push_back(Slot{v, true, OrientedEdge{in.edge, in.end == 1}});
    options.push_back(std::move(opts));
  }
  std::vector<Slot> chosen;
  auto assign = [&](const std::vector<Slot>& slots) {
    int s = static_cast<int>(slots.size());
    if (s > n) return;
    std::vector<int> indices(n);
    std::iota(indices.begin(), indices.end(), 1);
    std::vector<int> pick(s);
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == s) {
        Face f = empty_face(g);
        for (int i = 0; i < s; ++i) {
          if (slots[i].is_mover) {
            f.moving.push_back({slots[i].oe, pick[i]});
          } else {
            f.at_vertex[slots[i].vertex] = pick[i];
          }
        }
        std::sort(f.moving.begin(), f.moving.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i) {
          if (!used[i]) rest.push_back(i);
        }
        distribute(g, f, rest, out);
        return;
      }
      for (int i = 1; i <= n; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        pick[pos] = i;
        self(self, pos + 1);
        used[i] = 0;
      }
    };
    rec(rec, 0);
  };
  auto walk = [&](auto&& self, std::size_t b, int movers) -> void {
    if (movers > k) return;
    if (b == options.size()) {
      if (movers == k) assign(chosen);
      return;
    }
    self(self, b + 1, movers);  // vertex left empty
    for (const auto& slot : options[b]) {
      chosen.push_back(slot);
      self(self, b + 1, movers + (slot.is_mover ? 1 : 0));
      chosen.pop_back();
    }
  };
  walk(walk, 0, 0);
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].id(g), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Face> sorted;
  sorted.reserve(out.size());
  for (const auto& [id, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::pair<Face, Face> boundary(const Graph& g, const Face& f, int slot) {
  if (slot < 0 || slot >= f.dim()) throw GraphError("face has no such moving slot");
  auto [oe, mover] = f.moving[slot];
  Face plus = f;
  plus.moving.erase(plus.moving.begin() + slot);
  Face minus = plus;
  plus.at_vertex[oe.head(g)] = mover;
  auto& tuple = minus.on_edge[oe.edge];
  if (oe.forward) {
    tuple.push_back(mover);
  } else {
    tuple.insert(tuple.begin(), mover);
  }
  return {plus, minus};
}

Configuration realize_vertex(const Graph& g, const Face& f) {
  if (f.dim() != 0) throw GraphError("only 0-faces realize to a single configuration");
  return realize_cube(g, f, {});
}

Configuration realize_cube(const Graph& g, const Face& f, const std::vector<Rational>& s) {
  int n = f.token_count();
  Configuration x(n);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f.at_vertex[v] != 0) x[f.at_vertex[v] - 1] = Point::at_vertex(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<int> order = f.on_edge[e];
    Rational front_gap = 1, back_gap = 1;
    for (std::size_t m = 0; m < f.moving.size(); ++m) {
      const auto& [oe, index] = f.moving[m];
      if (oe.edge != e) continue;
      if (oe.forward) {
        order.push_back(index);
        back_gap = 1 - s.at(m);
      } else {
        order.insert(order.begin(), index);
        front_gap = 1 - s.at(m);
      }
    }
    if (order.empty()) continue;
    int l = static_cast<int>(order.size());
    Rational total = front_gap + back_gap + (l - 1);
    Rational pos = front_gap;
    for (int j = 0; j < l; ++j) {
      Rational t = pos / total;
      t.canonicalize();
      x[order[j] - 1] = g.normalize(Point::on_edge(e, t));
      pos += 1;
    }
  }
  return x;
}

Face face_of_configuration(const Graph& g, const Configuration& x) {
  Face f = empty_face(g);
  std::vector<std::vector<std::pair<Rational, int>>> by_edge(g.edge_count());
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i].is_vertex()) {
      if (!g.is_branched(x[i].id)) throw GraphError("token on an unbranched vertex is not a 0-face");
      f.at_vertex[x[i].id] = i + 1;
    } else {
      by_edge[x[i].id].push_back({x[i].t, i + 1});
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto& list = by_edge[e];
    std::sort(list.begin(), list.end());
    int l = static_cast<int>(list.size());
    for (int j = 0; j < l; ++j) {
      if (list[j].first != frac(j + 1, l + 1)) throw GraphError("configuration is not evenly spaced");
      f.on_edge[e].push_back(list[j].second);
    }
  }
  return f;
}

Skeleton one_skeleton(const Graph& g, int n) {
  Skeleton s;
  s.nodes = enumerate_faces(g, n, 0);
  for (int i = 0; i < static_cast<int>(s.nodes.size()); ++i) {
    s.node_ids.push_back(s.nodes[i].id(g));
    s.index.emplace(s.node_ids.back(), i);
  }
  s.incident.assign(s.nodes.size(), {});
  for (auto& face : enumerate_faces(g, n, 1)) {
    auto [plus, minus] = boundary(g, face, 0);
    SkeletonEdge edge{std::move(face), s.index.at(minus.id(g)), s.index.at(plus.id(g))};
    int id = static_cast<int>(s.edges.size());
    s.incident[edge.minus].push_back(id);
    s.incident[edge.plus].push_back(id);
    s.edges.push_back(std::move(edge));
  }
  s.component.assign(s.nodes.size(), -1);
  for (int start = 0; start < static_cast<int>(s.nodes.size()); ++start) {
    if (s.component[start] != -1) continue;
    std::deque<int> queue{start};
    s.component[start] = s.component_count;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : s.incident[u]) {
        int w = s.edges[e].minus == u ? s.edges[e].plus : s.edges[e].minus;
        if (s.component[w] == -1) {
          s.component[w] = s.component_count;
          queue.push_back(w);
        }
      }
    }
    ++s.component_count;
  }
  return s;
}

ComplexStats complex_stats(const Graph& g, int n) {
  ComplexStats stats;
  int top = std::min(static_cast<int>(g.branched_vertices().size()), n);
  for (int k = 0; k <= top; ++k) {
    long long count = static_cast<long long>(enumerate_faces(g, n, k).size());
    if (count == 0) break;
    stats.cells.push_back(count);
    stats.euler += (k % 2 == 0 ? 1 : -1) * count;
    stats.dim = k;
  }
  stats.skeleton_components = one_skeleton(g, n).component_count;
  return stats;
}

std::string skeleton_dot(const Graph& g, const Skeleton& s) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (int i = 0; i < static_cast<int>(s.nodes.size()); ++i) {
    out << "  n" << i << " [label=\"" << s.node_ids[i] << "\"];\n";
  }
  for (const auto& e : s.edges) {
    out << "  n" << e.minus << " -- n" << e.plus << " [label=\"" << e.face.id(g) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace confsect
