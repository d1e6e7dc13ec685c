#include "confsect/builders.hpp"

#include <deque>
#include <optional>
#include <gmpxx.h>

namespace confsect {

namespace {

Rational floor_of(const Rational& a) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return Rational(q);
}

Rational wrap(const Rational& a, int length) {
  Rational l(length);
  Rational r = a - floor_of(a / l) * l;
  r.canonicalize();
  return r;
}

Json oriented_json(const Graph& g, OrientedEdge oe) {
  return Json::array({g.edge(oe.edge).name, oe.forward ? "+" : "-"});
}

// min over k != 1 of d(x_1, x_k), optionally capped at 1.
Rational min_token_distance(const Graph& g, const Configuration& x, bool capped) {
  std::optional<Rational> d;
  if (capped) d = Rational(1);
  for (std::size_t k = 1; k < x.size(); ++k) {
    Rational dk = shortest_distance(g, x[0], x[k]);
    if (!d || dk < *d) d = dk;
  }
  return *d;
}

}  // namespace

Json IdentifyingFunction::descriptor() const {
  Json j;
  j["method"] = method();
  j["n"] = n_;
  j["graph"] = graph_to_json(g_);
  j["tables"] = tables();
  return j;
}

Point Circle::at(const Graph& g, Rational arc) const {
  arc = wrap(arc, length());
  Rational k = floor_of(arc);
  Rational frac_part = arc - k;
  frac_part.canonicalize();
  const auto& oe = edges[k.get_num().get_si()];
  if (frac_part == 0) return Point::at_vertex(oe.tail(g));
  Rational t = oe.forward ? frac_part : Rational(1 - frac_part);
  t.canonicalize();
  return Point::on_edge(oe.edge, t);
}

Rational Circle::arc_of(const Graph& g, const Point& p) const {
  for (int k = 0; k < length(); ++k) {
    const auto& oe = edges[k];
    if (p.is_vertex() && oe.tail(g) == p.id) return k;
    if (p.is_edge() && oe.edge == p.id) {
      Rational a = oe.forward ? Rational(k + p.t) : Rational(k + 1 - p.t);
      a.canonicalize();
      return a;
    }
  }
  throw BuildError("point is not on the circle");
}

bool Circle::contains_edge(int e) const {
  for (const auto& oe : edges) {
    if (oe.edge == e) return true;
  }
  return false;
}

Circle shortest_cycle(const Graph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) return Circle{{OrientedEdge{e, true}}};
  }
  Circle best;
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edge(e).tail, v = g.edge(e).head;
    // BFS from v back to u without e.
    std::vector<int> via(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> q{v};
    seen[v] = 1;
    while (!q.empty() && !seen[u]) {
      int a = q.front();
      q.pop_front();
      for (const auto& in : g.incidences(a)) {
        if (in.edge == e) continue;
        int b = g.other_end(in.edge, a);
        if (seen[b]) continue;
        seen[b] = 1;
        via[b] = in.edge;
        q.push_back(b);
      }
    }
    if (!seen[u]) continue;
    std::vector<OrientedEdge> back;
    for (int a = u; a != v;) {
      int f = via[a];
      int prev = g.other_end(f, a);
      back.push_back({f, g.edge(f).head == a});
      a = prev;
    }
    Circle c;
    c.edges.push_back({e, true});
    c.edges.insert(c.edges.end(), back.rbegin(), back.rend());
    if (best.edges.empty() || c.length() < best.length()) best = c;
  }
  if (best.edges.empty()) throw BuildError("graph has no cycle");
  return best;
}

CircleRetraction::CircleRetraction(const Graph& g, Circle c) : g_(&g), c_(std::move(c)) {
  int n = g.vertex_count();
  vertex_arc_.assign(n, -1);
  std::deque<int> q;
  for (int k = 0; k < c_.length(); ++k) {
    int v = c_.edges[k].tail(g);
    if (vertex_arc_[v] < 0) {
      vertex_arc_[v] = k;
      q.push_back(v);
    }
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (const auto& in : g.incidences(a)) {
      int b = g.other_end(in.edge, a);
      if (vertex_arc_[b] < 0) {
        vertex_arc_[b] = vertex_arc_[a];
        q.push_back(b);
      }
    }
  }
  int length = c_.length();
  edge_image_.assign(g.edge_count(), {0, 0});
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c_.contains_edge(e)) continue;
    const Rational& a = vertex_arc_[g.edge(e).tail];
    const Rational& b = vertex_arc_[g.edge(e).head];
    Rational d = wrap(b - a, length);
    Rational len = d * 2 <= length ? d : Rational(d - length);
    edge_image_[e] = {a, len};
  }
}

Rational CircleRetraction::arc(const Point& p) const {
  if (p.is_vertex()) return vertex_arc_[p.id];
  if (c_.contains_edge(p.id)) return c_.arc_of(*g_, p);
  const auto& [start, len] = edge_image_[p.id];
  return wrap(start + p.t * len, c_.length());
}

Point CircleRetraction::apply(const Point& p) const { return c_.at(*g_, arc(p)); }

Json CircleRetraction::tables() const {
  Json circle = Json::array();
  for (const auto& oe : c_.edges) circle.push_back(oriented_json(*g_, oe));
  Json arcs = Json::object();
  for (int v = 0; v < g_->vertex_count(); ++v) arcs[g_->vertex_name(v)] = to_string(vertex_arc_[v]);
  return {{"circle", circle}, {"vertex_arc", arcs}};
}

namespace {

class Antipode : public IdentifyingFunction {
 public:
  explicit Antipode(const Graph& g) : IdentifyingFunction(g, 1), r_(g_, shortest_cycle(g_)) {}
  std::string method() const override { return "antipode"; }
  Point evaluate(const Configuration& x) const override {
    if (x.size() != 1) throw BuildError("antipode takes one token");
    Rational half(r_.circle().length(), 2);
    half.canonicalize();
    return r_.circle().at(g_, r_.arc(x[0]) + half);
  }
  Json tables() const override { return r_.tables(); }

 private:
  CircleRetraction r_;
};

class TreeSection : public IdentifyingFunction {
 public:
  TreeSection(const Graph& g, int n) : IdentifyingFunction(g, n) {}
  std::string method() const override { return "tree"; }
  Point evaluate(const Configuration& x) const override {
    Rational delta = min_token_distance(g_, x, true) / 2;
    return point_along(g_, x[0], x[1], delta);
  }
  Json tables() const override { return {{"delta_cap", "1"}}; }
};

class Chi0Section : public IdentifyingFunction {
 public:
  Chi0Section(const Graph& g, int n) : IdentifyingFunction(g, n) {
    // Strip leaves to find the cycle.
    std::vector<int> deg(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) deg[v] = g_.degree(v);
    std::vector<char> removed(g_.vertex_count(), 0);
    std::deque<int> leaves;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (deg[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
      int v = leaves.front();
      leaves.pop_front();
      removed[v] = 1;
      for (const auto& in : g_.incidences(v)) {
        int u = g_.other_end(in.edge, v);
        if (!removed[u] && --deg[u] == 1) leaves.push_back(u);
      }
    }
    std::vector<char> on_cycle(g_.edge_count(), 0);
    int start = -1;
    for (int e = 0; e < g_.edge_count(); ++e) {
      const auto& ed = g_.edge(e);
      on_cycle[e] = !removed[ed.tail] && !removed[ed.head];
      if (on_cycle[e] && start < 0) start = e;
    }
    next_out_.assign(g_.vertex_count(), {-1, true});
    direction_.assign(g_.edge_count(), {-1, true});
    // Walk the cycle once from its first edge.
    OrientedEdge cur{start, true};
    do {
      cycle_.push_back(cur);
      direction_[cur.edge] = cur;
      int v = cur.head(g_);
      next_out_[cur.tail(g_)] = cur;
      OrientedEdge nxt{-1, true};
      for (const auto& in : g_.incidences(v)) {
        if (on_cycle[in.edge] && in.edge != cur.edge) {
          nxt = {in.edge, in.end == 0};
          break;
        }
      }
      if (nxt.edge < 0) nxt = cycle_.front();  // a loop closes on itself
      cur = nxt;
    } while (!(cur == cycle_.front()));
    // Tree edges point toward the cycle.
    std::deque<int> q;
    std::vector<char> seen(g_.vertex_count(), 0);
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (!removed[v]) {
        seen[v] = 1;
        q.push_back(v);
      }
    }
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (const auto& in : g_.incidences(a)) {
        int b = g_.other_end(in.edge, a);
        if (seen[b]) continue;
        seen[b] = 1;
        OrientedEdge toward{in.edge, g_.edge(in.edge).head == a};
        next_out_[b] = toward;
        direction_[in.edge] = toward;
        q.push_back(b);
      }
    }
  }

  std::string method() const override { return "chi0"; }

  Point evaluate(const Configuration& x) const override {
    Rational left = min_token_distance(g_, x, false) / 2;
    Point p = x[0];
    if (p.is_edge()) {
      OrientedEdge d = direction_[p.id];
      Rational room = d.forward ? Rational(1 - p.t) : p.t;
      if (left < room) {
        Rational t = d.forward ? Rational(p.t + left) : Rational(p.t - left);
        return g_.normalize(Point::on_edge(p.id, t));
      }
      left -= room;
      p = Point::at_vertex(d.head(g_));
    }
    int v = p.id;
    while (left >= 1) {
      v = next_out_[v].head(g_);
      left -= 1;
    }
    if (left == 0) return Point::at_vertex(v);
    OrientedEdge d = next_out_[v];
    Rational t = d.forward ? left : Rational(1 - left);
    return Point::on_edge(d.edge, t);
  }

  Json tables() const override {
    Json cycle = Json::array();
    for (const auto& oe : cycle_) cycle.push_back(oriented_json(g_, oe));
    Json out = Json::object();
    for (int v = 0; v < g_.vertex_count(); ++v) out[g_.vertex_name(v)] = oriented_json(g_, next_out_[v]);
    return {{"cycle", cycle}, {"next_out", out}};
  }

 private:
  std::vector<OrientedEdge> cycle_;
  std::vector<OrientedEdge> next_out_;
  std::vector<OrientedEdge> direction_;
};

}  // namespace

FunctionPtr build_antipode(const Graph& g) {
  if (euler_characteristic(g) > 0) throw BuildError("antipode needs a cycle; the graph is a tree");
  return std::make_shared<Antipode>(g);
}

FunctionPtr build_tree_section(const Graph& g, int n) {
  if (euler_characteristic(g) != 1) throw BuildError("tree section needs a tree");
  if (n < 2) throw BuildError("no section exists on a tree for n = 1");
  return std::make_shared<TreeSection>(g, n);
}

FunctionPtr build_chi0_section(const Graph& g, int n) {
  if (euler_characteristic(g) != 0) throw BuildError("chi0 section needs Euler characteristic 0");
  if (n < 1) throw BuildError("n must be positive");
  return std::make_shared<Chi0Section>(g, n);
}

FunctionPtr load_function(const Json& d) {
  Graph g = load_graph(d.at("graph"));
  auto method = d.at("method").get<std::string>();
  int n = d.at("n").get<int>();
  FunctionPtr f;
  if (method == "antipode") {
    f = build_antipode(g);
  } else if (method == "tree") {
    f = build_tree_section(g, n);
  } else if (method == "chi0") {
    f = build_chi0_section(g, n);
  } else if (method == "wedge") {
    f = build_wedge_section(g, g.vertex_index(d.at("tables").at("vertex").get<std::string>()), n);
  } else {
    throw BuildError("cannot reload method " + method);
  }
  if (f->n() != n) throw BuildError("descriptor token count does not match");
  if (f->tables() != d.at("tables")) throw BuildError("descriptor tables do not match the reconstruction");
  return f;
}

}  // namespace confsect
