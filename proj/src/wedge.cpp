#include "confsect/builders.hpp"

#include "confsect/predict.hpp"

#include <deque>
#include <numeric>

namespace confsect {

namespace {

// Point of the wedge H: w itself, or arc position in (0, L) on a circle.
struct HPoint {
  int circle = -1;
  Rational arc;
};

struct WedgeData {
  int w = 0;
  int n = 0;
  Rational eps;
  std::vector<Circle> circles;
  std::vector<HPoint> vertex_image;
  // Per edge: circle used for its image and arcs at tail / head (0 means w).
  struct EdgeImage {
    int circle = -1;  // -1: edge lies on H
    Rational tail;
    Rational head;
  };
  std::vector<EdgeImage> edge_image;
  std::vector<int> edge_circle;  // circle containing the edge, or -1
};

Rational dist_to_w(const WedgeData& d, const HPoint& p) {
  if (p.circle < 0) return 0;
  Rational l(d.circles[p.circle].length());
  return std::min<Rational>(p.arc, l - p.arc);
}

HPoint retract(const Graph& g, const WedgeData& d, const Point& p) {
  if (p.is_vertex()) return d.vertex_image[p.id];
  int c = d.edge_circle[p.id];
  if (c >= 0) {
    Rational a = d.circles[c].arc_of(g, p);
    if (a == 0) return {};
    return {c, a};
  }
  const auto& im = d.edge_image[p.id];
  Rational a = im.tail + p.t * (im.head - im.tail);
  a.canonicalize();
  if (a == 0) return {};
  return {im.circle, a};
}

Point wedge_value(const Graph& g, const WedgeData& d, const Configuration& y) {
  std::vector<HPoint> h;
  for (const auto& p : y) h.push_back(retract(g, d, p));
  int near = -1;
  for (int k = 0; k < static_cast<int>(h.size()); ++k) {
    if (dist_to_w(d, h[k]) < d.eps) {
      if (near >= 0) throw BuildError("two tokens within epsilon of the wedge vertex");
      near = k;
    }
  }
  if (near < 0) return Point::at_vertex(d.w);
  std::vector<int> psi(d.circles.size(), 0);
  for (int k = 0; k < static_cast<int>(h.size()); ++k) {
    if (k != near) ++psi[h[k].circle];
  }
  int target = 0;
  while (psi[target] != 0) ++target;
  const auto& q = h[near];
  Rational half(d.circles[target].length(), 2);
  half.canonicalize();
  Rational arc = half;
  if (q.circle >= 0) {
    Rational l(d.circles[q.circle].length());
    if (q.arc < d.eps) {
      arc = half + q.arc / d.eps * half;
    } else {
      arc = half - (l - q.arc) / d.eps * half;
    }
  }
  return d.circles[target].at(g, arc);
}

WedgeData wedge_data(const Graph& g, int w, int n) {
  WedgeData d;
  d.w = w;
  d.n = n;
  d.eps = frac(1, 2 * (n + 2));
  int nv = g.vertex_count();
  // Components of G minus w.
  std::vector<int> comp(nv, -1);
  int count = 0;
  for (int s = 0; s < nv; ++s) {
    if (s == w || comp[s] >= 0) continue;
    std::deque<int> q{s};
    comp[s] = count;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (const auto& in : g.incidences(a)) {
        int b = g.other_end(in.edge, a);
        if (b != w && comp[b] < 0) {
          comp[b] = count;
          q.push_back(b);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> attach(count);
  std::vector<int> loops;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.is_loop() && ed.tail == w) {
      loops.push_back(e);
    } else if (ed.tail == w) {
      attach[comp[ed.head]].push_back(e);
    } else if (ed.head == w) {
      attach[comp[ed.tail]].push_back(e);
    }
  }
  // One circle per qualifying component, ordered by smallest edge index.
  std::vector<std::pair<int, int>> order;  // (first edge, component or -1-loop)
  for (int e : loops) order.push_back({e, -1 - e});
  for (int c = 0; c < count; ++c) {
    if (attach[c].size() >= 2) order.push_back({attach[c][0], c});
  }
  std::sort(order.begin(), order.end());
  std::vector<int> circle_of_comp(count, -1);
  for (const auto& [first, c] : order) {
    Circle circle;
    if (c < 0) {
      circle.edges.push_back({-1 - c, true});
    } else {
      int a = attach[c][0], b = attach[c][1];
      int za = g.other_end(a, w), zb = g.other_end(b, w);
      std::vector<int> via(nv, -1);
      std::vector<char> seen(nv, 0);
      std::deque<int> q{za};
      seen[za] = 1;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const auto& in : g.incidences(x)) {
          int y = g.other_end(in.edge, x);
          if (y == w || seen[y]) continue;
          seen[y] = 1;
          via[y] = in.edge;
          q.push_back(y);
        }
      }
      std::vector<OrientedEdge> path;
      for (int x = zb; x != za;) {
        int e = via[x];
        int prev = g.other_end(e, x);
        path.push_back({e, g.edge(e).head == x});
        x = prev;
      }
      circle.edges.push_back({a, g.edge(a).tail == w});
      circle.edges.insert(circle.edges.end(), path.rbegin(), path.rend());
      circle.edges.push_back({b, g.edge(b).head == w});
      circle_of_comp[c] = static_cast<int>(d.circles.size());
    }
    d.circles.push_back(circle);
  }
  if (static_cast<int>(d.circles.size()) < n) {
    throw BuildError("vertex " + g.vertex_name(w) + " has only " + std::to_string(d.circles.size()) +
                     " qualifying components, fewer than n");
  }
  // Vertex images.
  d.vertex_image.assign(nv, {});
  d.edge_circle.assign(g.edge_count(), -1);
  std::vector<char> placed(nv, 0);
  placed[w] = 1;
  std::deque<int> q;
  for (int c = 0; c < static_cast<int>(d.circles.size()); ++c) {
    for (int k = 0; k < d.circles[c].length(); ++k) {
      const auto& oe = d.circles[c].edges[k];
      d.edge_circle[oe.edge] = c;
      int v = oe.tail(g);
      if (!placed[v]) {
        placed[v] = 1;
        d.vertex_image[v] = {c, k};
        q.push_back(v);
      }
    }
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (const auto& in : g.incidences(a)) {
      int b = g.other_end(in.edge, a);
      if (placed[b]) continue;
      placed[b] = 1;
      d.vertex_image[b] = d.vertex_image[a];
      q.push_back(b);
    }
  }
  Rational far(d.circles[0].length(), 2);
  far.canonicalize();
  for (int v = 0; v < nv; ++v) {
    if (!placed[v]) d.vertex_image[v] = {0, far};  // components attached once
  }
  d.edge_image.assign(g.edge_count(), {});
  for (int e = 0; e < g.edge_count(); ++e) {
    if (d.edge_circle[e] >= 0) continue;
    const auto& ed = g.edge(e);
    const auto& a = d.vertex_image[ed.tail];
    const auto& b = d.vertex_image[ed.head];
    int c = a.circle >= 0 ? a.circle : b.circle;
    if (c < 0) throw BuildError("loop at the wedge vertex outside every circle");
    d.edge_image[e] = {c, a.circle < 0 ? Rational(0) : a.arc, b.circle < 0 ? Rational(0) : b.arc};
  }
  return d;
}

Json wedge_tables(const Graph& g, const WedgeData& d) {
  Json circles = Json::array();
  for (const auto& c : d.circles) {
    Json edges = Json::array();
    for (const auto& oe : c.edges) edges.push_back(Json::array({g.edge(oe.edge).name, oe.forward ? "+" : "-"}));
    circles.push_back(edges);
  }
  Json images = Json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& h = d.vertex_image[v];
    images[g.vertex_name(v)] = h.circle < 0 ? Json("w") : Json::array({h.circle, to_string(h.arc)});
  }
  return {{"vertex", g.vertex_name(d.w)}, {"epsilon", to_string(d.eps)}, {"circles", circles}, {"retraction", images}};
}

}  // namespace

FunctionPtr build_wedge_section(const Graph& g, int w, int n) {
  if (n < 1) throw BuildError("n must be positive");
  if (w < 0 || w >= g.vertex_count()) throw BuildError("no such vertex");
  auto data = std::make_shared<WedgeData>(wedge_data(g, w, n));
  auto graph = std::make_shared<Graph>(g);
  CubeFunction cube = [data, graph](const Face&, const std::vector<Rational>&, const Configuration& y) {
    return wedge_value(*graph, *data, y);
  };
  auto pf = tabulate(g, n, cube);
  return extend_to_full(g, n, std::move(pf), "wedge", wedge_tables(g, *data));
}

}  // namespace confsect
