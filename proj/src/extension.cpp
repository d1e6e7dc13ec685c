#include "confsect/builders.hpp"

#include <algorithm>

namespace confsect {

CubePoint cube_coordinates(const Graph& g, const Configuration& x) {
  check_configuration(g, x);
  int n = static_cast<int>(x.size());
  Face f = empty_face(g);
  std::vector<std::vector<std::pair<Rational, int>>> by_edge(g.edge_count());
  for (int k = 0; k < n; ++k) {
    const auto& p = x[k];
    if (p.is_edge()) {
      by_edge[p.id].push_back({p.t, k + 1});
    } else if (g.is_free(p.id)) {
      const auto& in = g.incidences(p.id)[0];
      by_edge[in.edge].push_back({Rational(in.end), k + 1});
    } else {
      f.at_vertex[p.id] = k + 1;
    }
  }
  for (auto& list : by_edge) std::sort(list.begin(), list.end());

  struct Candidate {
    Rational d;
    int token;
    OrientedEdge toward;
  };
  std::vector<std::pair<OrientedEdge, int>> movers;
  std::vector<Rational> progress;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_branched(v) || f.at_vertex[v] != 0) continue;
    std::vector<Candidate> near;
    for (const auto& in : g.incidences(v)) {
      const auto& list = by_edge[in.edge];
      if (list.empty()) continue;
      if (in.end == 0) {
        near.push_back({list.front().first, list.front().second, {in.edge, false}});
      } else {
        near.push_back({1 - list.back().first, list.back().second, {in.edge, true}});
      }
    }
    if (near.empty()) continue;
    std::sort(near.begin(), near.end(), [](const Candidate& a, const Candidate& b) { return a.d < b.d; });
    Rational d2 = near.size() > 1 ? near[1].d : Rational(1);
    if (d2 > 1) d2 = 1;
    Rational s = std::min<Rational>(1 - 2 * near[0].d / d2, 1 - (n + 1) * near[0].d);
    if (s <= 0) continue;
    s.canonicalize();
    movers.push_back({near[0].toward, near[0].token});
    progress.push_back(s);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    for (const auto& [t, k] : by_edge[e]) {
      bool moving = std::any_of(movers.begin(), movers.end(), [&](const auto& m) { return m.second == k; });
      if (!moving) f.on_edge[e].push_back(k);
    }
  }
  std::vector<int> order(movers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return movers[a].first < movers[b].first; });
  CubePoint out{f, {}};
  for (int i : order) {
    out.face.moving.push_back(movers[i]);
    out.s.push_back(progress[i]);
  }
  return out;
}

PartialIdentifyingFunction tabulate(const Graph& g, int n, CubeFunction cube) {
  PartialIdentifyingFunction pf;
  for (const auto& f : enumerate_faces(g, n, 0)) pf.values[f.id(g)] = cube(f, {}, realize_vertex(g, f));
  pf.cube = std::move(cube);
  return pf;
}

bool check_extendable(const Graph& g, int n, const PartialIdentifyingFunction& pf) {
  for (const auto& f : enumerate_faces(g, n, 0)) {
    auto it = pf.values.find(f.id(g));
    if (it == pf.values.end()) throw BuildError("partial function misses 0-face " + f.id(g));
    const Point& p = it->second;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      int v;
      int free;
      if (g.is_free(ed.head) && g.is_branched(ed.tail)) {
        v = ed.tail;
        free = ed.head;
      } else if (g.is_free(ed.tail) && g.is_branched(ed.head)) {
        v = ed.head;
        free = ed.tail;
      } else {
        continue;
      }
      if (f.at_vertex[v] == 0 || !f.on_edge[e].empty()) continue;
      if ((p.is_edge() && p.id == e) || (p.is_vertex() && p.id == free)) return false;
    }
  }
  return true;
}

namespace {

class Extended : public IdentifyingFunction {
 public:
  Extended(const Graph& g, int n, PartialIdentifyingFunction pf, std::string method, Json extra)
      : IdentifyingFunction(g, n), pf_(std::move(pf)), method_(std::move(method)), extra_(std::move(extra)) {}

  std::string method() const override { return method_; }

  Point evaluate(const Configuration& x) const override {
    if (static_cast<int>(x.size()) != n_) throw BuildError("wrong token count");
    CubePoint c = cube_coordinates(g_, x);
    Configuration y;
    Point p;
    if (pf_.cube) {
      y = realize_cube(g_, c.face, c.s);
      p = pf_.cube(c.face, c.s, y);
    } else {
      // Table only: snap each mover short of its vertex back to its slot.
      Face f = c.face;
      for (int i = f.dim() - 1; i >= 0; --i) {
        auto [plus, minus] = boundary(g_, f, i);
        f = c.s[i] == 1 ? plus : minus;
      }
      y = realize_vertex(g_, f);
      auto it = pf_.values.find(f.id(g_));
      if (it == pf_.values.end()) throw BuildError("no value for 0-face " + f.id(g_));
      p = it->second;
    }
    if (p.is_vertex()) return p;
    // Markers on p's edge: (parameter in y, parameter in x).
    int e = p.id;
    std::vector<std::pair<Rational, Rational>> marks{{0, 0}, {1, 1}};
    for (int k = 0; k < n_; ++k) {
      if (!y[k].is_edge() || y[k].id != e) continue;
      Rational tx = x[k].is_edge() ? x[k].t : Rational(g_.edge(e).head == x[k].id ? 1 : 0);
      marks.push_back({y[k].t, tx});
    }
    std::sort(marks.begin(), marks.end());
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
      const auto& [a1, b1] = marks[i];
      const auto& [a2, b2] = marks[i + 1];
      if (!(a1 < p.t && p.t < a2)) continue;
      if (b1 >= b2) throw BuildError("degenerate placement interval; the partial function is not extendable");
      Rational t = b1 + (p.t - a1) / (a2 - a1) * (b2 - b1);
      t.canonicalize();
      return Point::on_edge(e, t);
    }
    throw BuildError("partial function value coincides with a token");
  }

  Json tables() const override {
    Json j = extra_;
    Json values = Json::object();
    for (const auto& [id, p] : pf_.values) values[id] = point_to_json(g_, p);
    j["values"] = values;
    return j;
  }

 private:
  PartialIdentifyingFunction pf_;
  std::string method_;
  Json extra_;
};

}  // namespace

FunctionPtr extend_to_full(const Graph& g, int n, PartialIdentifyingFunction pf, std::string method, Json extra) {
  if (!check_extendable(g, n, pf)) throw BuildError("partial identifying function is not extendable");
  return std::make_shared<Extended>(g, n, std::move(pf), std::move(method), std::move(extra));
}

}  // namespace confsect
