#include "confsect/transitions.hpp"

#include <algorithm>
#include <set>

namespace confsect {

namespace {

int token_at(const Configuration& x, const Point& p) {
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] == p) return i;
  }
  return -1;
}

// Tokens on edge e in positive order, with departures inserted at the matching end.
std::vector<int> source_order(const Graph& g, const TypeIMove& m, int e) {
  std::vector<std::pair<Rational, int>> inner;
  int front = -1, back = -1;
  for (int i = 0; i < static_cast<int>(m.source.size()); ++i) {
    const auto& p = m.source[i];
    if (p.is_edge() && p.id == e) inner.push_back({p.t, i});
    if (m.departures[i] && m.departures[i]->edge == e) {
      if (m.departures[i]->from_tail) {
        front = i;
      } else {
        back = i;
      }
    }
  }
  (void)g;
  std::sort(inner.begin(), inner.end());
  std::vector<int> order;
  if (front >= 0) order.push_back(front);
  for (const auto& [t, i] : inner) order.push_back(i);
  if (back >= 0) order.push_back(back);
  return order;
}

std::vector<int> target_order(const Configuration& y, int e) {
  std::vector<std::pair<Rational, int>> inner;
  for (int i = 0; i < static_cast<int>(y.size()); ++i) {
    if (y[i].is_edge() && y[i].id == e) inner.push_back({y[i].t, i});
  }
  std::sort(inner.begin(), inner.end());
  std::vector<int> order;
  for (const auto& [t, i] : inner) order.push_back(i);
  return order;
}

int find_component(const std::vector<Component>& comps, const Component& c) {
  auto it = std::lower_bound(comps.begin(), comps.end(), c);
  if (it == comps.end() || *it != c) return -1;
  return static_cast<int>(it - comps.begin());
}

}  // namespace

TypeIMove make_type1(const Graph& g, Configuration source, Configuration target) {
  if (source.size() != target.size()) throw TransitionError("configurations differ in size");
  TypeIMove m{std::move(source), std::move(target), {}};
  m.departures.assign(m.source.size(), std::nullopt);
  int loop_token = -1;
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    const auto& p = m.source[i];
    const auto& q = m.target[i];
    if (p.is_vertex() && q.is_edge()) {
      const auto& e = g.edge(q.id);
      if (e.tail != p.id && e.head != p.id) throw TransitionError("token jumps to a non-incident edge");
      bool from_tail = e.tail == p.id;
      if (e.is_loop()) {
        from_tail = q.t * 2 <= 1;
        loop_token = static_cast<int>(i);
      }
      m.departures[i] = Departure{q.id, from_tail};
    }
  }
  if (loop_token >= 0) {
    // The nearer side may violate the order of tokens already on the loop.
    try {
      check_type1(g, m);
      return m;
    } catch (const TransitionError&) {
      m.departures[loop_token]->from_tail = !m.departures[loop_token]->from_tail;
    }
  }
  check_type1(g, m);
  return m;
}

void check_type1(const Graph& g, const TypeIMove& m) {
  check_configuration(g, m.source);
  check_configuration(g, m.target);
  if (m.departures.size() != m.source.size()) throw TransitionError("departure list has the wrong size");
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    const auto& p = m.source[i];
    const auto& q = m.target[i];
    if (p.is_edge()) {
      if (!q.is_edge() || q.id != p.id) throw TransitionError("a token enters a vertex or changes edge");
      if (m.departures[i]) throw TransitionError("interior token with a departure");
    } else if (m.departures[i]) {
      const auto& d = *m.departures[i];
      if (!q.is_edge() || q.id != d.edge) throw TransitionError("departure does not match the target edge");
      int end_vertex = d.from_tail ? g.edge(d.edge).tail : g.edge(d.edge).head;
      if (end_vertex != p.id) throw TransitionError("departure from the wrong end");
    } else if (!(q == p)) {
      throw TransitionError("vertex token moves without a departure");
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (source_order(g, m, e) != target_order(m.target, e)) throw TransitionError("tokens cross on an edge");
  }
}

TypeIIMove make_type2(const Graph& g, const Configuration& source, int token, OrientedEdge toward) {
  check_configuration(g, source);
  if (token < 0 || token >= static_cast<int>(source.size())) throw TransitionError("no such token");
  const auto& p = source[token];
  if (!p.is_edge() || p.id != toward.edge) throw TransitionError("mover must be interior to the chosen edge");
  int v = toward.head(g);
  if (g.degree(v) == 2) throw TransitionError("moves into a degree-2 vertex are not modeled");
  if (token_at(source, Point::at_vertex(v)) >= 0) throw TransitionError("target vertex is occupied");
  for (int j = 0; j < static_cast<int>(source.size()); ++j) {
    const auto& q = source[j];
    if (j == token || !q.is_edge() || q.id != p.id) continue;
    if ((toward.forward && q.t > p.t) || (!toward.forward && q.t < p.t)) {
      throw TransitionError("mover is blocked by another token");
    }
  }
  TypeIIMove m{token, toward, source, source};
  m.target[token] = Point::at_vertex(v);
  return m;
}

TransitionRelation type1_transition(const Graph& g, const TypeIMove& m) {
  check_type1(g, m);
  TransitionRelation r;
  r.sources = complement_components(g, m.source);
  r.targets = complement_components(g, m.target);
  for (const auto& x : r.sources) {
    if (!x.vertices.empty()) {
      r.rows.push_back({component_index(r.targets, Point::at_vertex(x.vertices.front()))});
      continue;
    }
    const Piece& piece = x.pieces.front();
    const auto& e = g.edge(piece.edge);
    struct End {
      bool kept;
      Rational pos;
      int vertex;
    };
    auto classify = [&](const Rational& t, bool low) -> End {
      bool at_vertex = low ? t == 0 : t == 1;
      if (!at_vertex) {
        int a = token_at(m.source, Point::on_edge(piece.edge, t));
        return {true, m.target[a].t, -1};
      }
      int v = low ? e.tail : e.head;
      int a = token_at(m.source, Point::at_vertex(v));
      if (m.target[a] == m.source[a]) return {true, low ? Rational(0) : Rational(1), v};
      const auto& d = m.departures[a];
      if (d && d->edge == piece.edge && d->from_tail == low) return {true, m.target[a].t, v};
      return {false, 0, v};
    };
    End lo = classify(piece.lo, true);
    End hi = classify(piece.hi, false);
    if (lo.kept && hi.kept) {
      r.rows.push_back({component_index(r.targets, Point::on_edge(piece.edge, midpoint(lo.pos, hi.pos)))});
    } else {
      int v = lo.kept ? hi.vertex : lo.vertex;
      r.rows.push_back({component_index(r.targets, Point::at_vertex(v))});
    }
  }
  return r;
}

TransitionRelation type2_transition(const Graph& g, const TypeIIMove& m) {
  const auto& p = m.source.at(m.token);
  int v = m.toward.head(g);
  if (g.degree(v) == 2) throw TransitionError("moves into a degree-2 vertex are not modeled");
  TransitionRelation r;
  r.sources = complement_components(g, m.source);
  r.targets = complement_components(g, m.target);
  int e = m.toward.edge;
  Rational back_end = m.toward.forward ? Rational(0) : Rational(1);
  for (const auto& q : m.source) {
    if (!q.is_edge() || q.id != e) continue;
    if (m.toward.forward && q.t < p.t && q.t > back_end) back_end = q.t;
    if (!m.toward.forward && q.t > p.t && q.t < back_end) back_end = q.t;
  }
  int behind = component_index(r.sources, Point::on_edge(e, midpoint(back_end, p.t)));
  int ahead = component_index(r.sources, Point::at_vertex(v));
  Rational v_end = m.toward.forward ? Rational(1) : Rational(0);
  int came_from = component_index(r.targets, Point::on_edge(e, midpoint(p.t, v_end)));
  // Components entered through the other edge-ends at v. One of them may
  // coincide with came_from when v lies on a cycle through the swept edge.
  std::set<int> star_set;
  int arriving_end = m.toward.forward ? 1 : 0;
  for (const auto& in : g.incidences(v)) {
    if (in.edge == e && in.end == arriving_end) continue;
    Rational bound = in.end == 0 ? Rational(1) : Rational(0);
    for (const auto& q : m.target) {
      if (!q.is_edge() || q.id != in.edge) continue;
      if (in.end == 0 && q.t < bound) bound = q.t;
      if (in.end == 1 && q.t > bound) bound = q.t;
    }
    Rational t = midpoint(in.end == 0 ? Rational(0) : Rational(1), bound);
    star_set.insert(component_index(r.targets, Point::on_edge(in.edge, t)));
  }
  std::vector<int> star(star_set.begin(), star_set.end());
  for (int i = 0; i < static_cast<int>(r.sources.size()); ++i) {
    if (i == ahead) {
      r.rows.push_back(star);
    } else if (i == behind) {
      r.rows.push_back({came_from});
    } else {
      int j = find_component(r.targets, r.sources[i]);
      if (j < 0) throw TransitionError("untouched component changed under a single move");
      r.rows.push_back({j});
    }
  }
  return r;
}

TransitionRelation compose(const TransitionRelation& a, const TransitionRelation& b) {
  if (a.targets != b.sources) throw TransitionError("relations do not compose");
  TransitionRelation r{a.sources, b.targets, {}};
  for (const auto& row : a.rows) {
    std::set<int> out;
    for (int mid : row) out.insert(b.rows[mid].begin(), b.rows[mid].end());
    r.rows.emplace_back(out.begin(), out.end());
  }
  return r;
}

std::pair<Rational, Rational> approach_segment(const Graph& g, const Face& one_face) {
  if (one_face.dim() != 1) throw TransitionError("expected a 1-face");
  const auto& [oe, mover] = one_face.moving[0];
  auto [plus, minus] = boundary(g, one_face, 0);
  Configuration q = realize_vertex(g, plus);
  Rational lo = 0, hi = 1;
  for (int j = 0; j < static_cast<int>(q.size()); ++j) {
    if (j == mover - 1 || !q[j].is_edge() || q[j].id != oe.edge) continue;
    if (oe.forward && q[j].t > lo) lo = q[j].t;
    if (!oe.forward && q[j].t < hi) hi = q[j].t;
  }
  return {lo, hi};
}

TransitionRelation skeleton_edge_relation(const Graph& g, const Face& one_face, Direction dir,
                                          const std::optional<Rational>& approach) {
  if (one_face.dim() != 1) throw TransitionError("expected a 1-face");
  const auto [oe, mover] = one_face.moving[0];
  auto [plus, minus] = boundary(g, one_face, 0);
  Configuration p = realize_vertex(g, minus);
  Configuration q = realize_vertex(g, plus);
  int token = mover - 1;
  if (dir == Direction::out_of_vertex) {
    TypeIMove m{q, p, std::vector<std::optional<Departure>>(q.size())};
    m.departures[token] = Departure{oe.edge, !oe.forward};
    return type1_transition(g, m);
  }
  Rational stop = approach ? *approach : midpoint(p[token].t, oe.forward ? Rational(1) : Rational(0));
  auto [lo, hi] = approach_segment(g, one_face);
  if (stop <= lo || stop >= hi) throw TransitionError("approach point outside the final segment");
  Configuration mid = q;
  mid[token] = Point::on_edge(oe.edge, stop);
  TypeIMove first{p, mid, std::vector<std::optional<Departure>>(p.size())};
  TypeIIMove second = make_type2(g, mid, token, oe);
  return compose(type1_transition(g, first), type2_transition(g, second));
}

std::vector<EdgeRelations> skeleton_relations(const Graph& g, const Skeleton& s) {
  std::vector<EdgeRelations> out;
  out.reserve(s.edges.size());
  for (const auto& e : s.edges) {
    out.push_back({skeleton_edge_relation(g, e.face, Direction::into_vertex),
                   skeleton_edge_relation(g, e.face, Direction::out_of_vertex)});
  }
  return out;
}

bool adjoint(const EdgeRelations& r) {
  if (r.forward.sources != r.backward.targets || r.forward.targets != r.backward.sources) return false;
  for (int x = 0; x < static_cast<int>(r.forward.rows.size()); ++x) {
    for (int y : r.forward.rows[x]) {
      if (r.backward.rows[y] != std::vector<int>{x}) return false;
    }
  }
  return true;
}

}  // namespace confsect
