#include "oracles/oracles.hpp"

#include <limits>
#include <stdexcept>

namespace oracle {

long long count_faces(const confsect::Graph& g, int n, int k) {
  // Location codes: [0, E) edges, then branched vertices, then oriented edges.
  std::vector<int> branched = g.branched_vertices();
  struct Loc {
    int edge = -1;
    int vertex = -1;
    bool mover = false;
  };
  std::vector<Loc> locs;
  for (int e = 0; e < g.edge_count(); ++e) locs.push_back({e, -1, false});
  for (int v : branched) locs.push_back({-1, v, false});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (g.is_branched(ed.head)) locs.push_back({e, ed.head, true});
    if (g.is_branched(ed.tail)) locs.push_back({e, ed.tail, true});
  }
  std::vector<int> choice(n, 0);
  long long total = 0;
  auto factorial = [](int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  while (true) {
    std::vector<int> vertex_use(g.vertex_count(), 0);
    std::vector<int> per_edge(g.edge_count(), 0);
    int movers = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Loc& l = locs[choice[i]];
      if (l.vertex >= 0) {
        if (++vertex_use[l.vertex] > 1) ok = false;
        if (l.mover) ++movers;
      } else {
        ++per_edge[l.edge];
      }
    }
    if (ok && movers == k) {
      long long w = 1;
      for (int c : per_edge) w *= factorial(c);
      total += w;
    }
    int pos = 0;
    while (pos < n && ++choice[pos] == static_cast<int>(locs.size())) choice[pos++] = 0;
    if (pos == n) break;
  }
  return total;
}

SubdividedMetric::SubdividedMetric(const confsect::Graph& g, int res) : g_(g), res_(res) {
  int nodes = g.vertex_count() + g.edge_count() * (res - 1);
  const double inf = std::numeric_limits<double>::infinity();
  d_.assign(nodes, std::vector<double>(nodes, inf));
  for (int i = 0; i < nodes; ++i) d_[i][i] = 0;
  double step = 1.0 / res;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int j = 0; j < res; ++j) {
      int a = node(g.normalize(confsect::Point::on_edge(e, confsect::frac(j, res))));
      int b = node(g.normalize(confsect::Point::on_edge(e, confsect::frac(j + 1, res))));
      if (step < d_[a][b]) d_[a][b] = d_[b][a] = step;
    }
  }
  for (int m = 0; m < nodes; ++m) {
    for (int i = 0; i < nodes; ++i) {
      for (int j = 0; j < nodes; ++j) {
        if (d_[i][m] + d_[m][j] < d_[i][j]) d_[i][j] = d_[i][m] + d_[m][j];
      }
    }
  }
}

int SubdividedMetric::node(const confsect::Point& p) const {
  if (p.is_vertex()) return p.id;
  confsect::Rational scaled = p.t * res_;
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw std::invalid_argument("point is not on the grid");
  int j = static_cast<int>(scaled.get_num().get_si());
  return g_.vertex_count() + p.id * (res_ - 1) + (j - 1);
}

double SubdividedMetric::distance(const confsect::Point& p, const confsect::Point& q) const {
  return d_[node(p)][node(q)];
}

std::vector<std::set<int>> spanning_trees(const confsect::Graph& g) {
  std::vector<std::set<int>> out;
  int m = g.edge_count();
  int need = g.vertex_count() - 1;
  for (long mask = 0; mask < (1L << m); ++mask) {
    if (__builtin_popcountl(mask) != need) continue;
    std::vector<int> parent(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a];
      return a;
    };
    bool acyclic = true;
    std::set<int> edges;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(g.edge(e).tail), b = find(g.edge(e).head);
      if (a == b) acyclic = false;
      parent[a] = b;
      edges.insert(e);
    }
    if (acyclic) out.push_back(edges);
  }
  return out;
}

}  // namespace oracle
