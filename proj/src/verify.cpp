#include "confsect/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace confsect {

namespace {

constexpr std::size_t kKeptViolations = 20;
const Rational kMinGap = frac(1, 1000000);

Rational dyadic(std::mt19937_64& rng, int bits, long lo, long hi) {
  std::uniform_int_distribution<long> pick(lo, hi);
  Rational r(pick(rng), 1L << bits);
  r.canonicalize();
  return r;
}

bool separated(const Graph& g, const Configuration& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (shortest_distance(g, x[i], x[j]) < kMinGap) return false;
    }
  }
  return true;
}

int component_of_value(const Graph& g, const Configuration& x, const Point& p) {
  return component_index(complement_components(g, x), p);
}

}  // namespace

void VerificationReport::add(Violation v) {
  ++violation_count;
  if (violations.size() < kKeptViolations) violations.push_back(std::move(v));
}

void VerificationReport::merge(const VerificationReport& o) {
  samples += o.samples;
  violation_count += o.violation_count;
  for (const auto& v : o.violations) {
    if (violations.size() < kKeptViolations) violations.push_back(v);
  }
  max_ratio = std::max(max_ratio, o.max_ratio);
  lipschitz = std::max(lipschitz, o.lipschitz);
  transition_pass += o.transition_pass;
  transition_fail += o.transition_fail;
}

double default_lipschitz(const std::string& method) {
  if (method == "tree" || method == "chi0") return 4;
  if (method == "antipode") return 2;
  return 8;
}

Configuration random_configuration(const Graph& g, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 15);
  std::uniform_int_distribution<int> vertex(0, g.vertex_count() - 1);
  std::uniform_int_distribution<int> edge(0, g.edge_count() - 1);
  for (;;) {
    Configuration x;
    for (int k = 0; k < n; ++k) {
      if (coin(rng) == 0) {
        x.push_back(Point::at_vertex(vertex(rng)));
      } else {
        x.push_back(Point::on_edge(edge(rng), dyadic(rng, 20, 1, (1L << 20) - 1)));
      }
    }
    if (separated(g, x)) return x;
  }
}

VerificationReport verify_identifying(const IdentifyingFunction& f, long long samples, std::uint64_t seed) {
  VerificationReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const Graph& g = f.graph();
  for (long long s = 0; s < samples; ++s) {
    Configuration x = random_configuration(g, f.n(), rng);
    ++r.samples;
    try {
      Point p = g.normalize(f.evaluate(x));
      g.check_point(p);
      if (std::find(x.begin(), x.end(), p) != x.end()) r.add({x, "separation", "value coincides with a token"});
    } catch (const std::exception& e) {
      r.add({x, "evaluation", e.what()});
    }
  }
  return r;
}

namespace {

// Moves token j by exactly `step` in a random direction; nullopt if blocked.
std::optional<Point> nudge(const Graph& g, const Configuration& x, int j, const Rational& step, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  const Point& p = x[j];
  auto enter = [&](int v, Rational left) -> Point {
    const auto& inc = g.incidences(v);
    std::uniform_int_distribution<std::size_t> pick(0, inc.size() - 1);
    const auto& in = inc[pick(rng)];
    return g.normalize(Point::on_edge(in.edge, in.end == 0 ? left : Rational(1 - left)));
  };
  Point q;
  if (p.is_vertex()) {
    q = enter(p.id, step);
  } else {
    bool up = coin(rng) == 1;
    Rational room = up ? Rational(1 - p.t) : p.t;
    if (step < room) {
      q = Point::on_edge(p.id, up ? Rational(p.t + step) : Rational(p.t - step));
    } else {
      int v = up ? g.edge(p.id).head : g.edge(p.id).tail;
      // Half the time stop at the vertex; otherwise carry on past it.
      if (step == room || coin(rng) == 0) {
        q = Point::at_vertex(v);
      } else {
        q = enter(v, step - room);
      }
    }
  }
  Rational moved = shortest_distance(g, p, q);
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    if (k == j) continue;
    Rational detour = shortest_distance(g, x[k], p) + shortest_distance(g, x[k], q) - moved;
    if (detour < 2 * kMinGap) return std::nullopt;
  }
  return q;
}

}  // namespace

VerificationReport verify_continuity(const IdentifyingFunction& f, int paths, int steps, std::uint64_t seed,
                                     double lipschitz) {
  VerificationReport r;
  r.seed = seed;
  r.lipschitz = lipschitz;
  std::mt19937_64 rng(seed);
  const Graph& g = f.graph();
  std::uniform_int_distribution<int> token(0, f.n() - 1);
  for (int path = 0; path < paths; ++path) {
    Configuration x = random_configuration(g, f.n(), rng);
    Point fx;
    try {
      fx = f.evaluate(x);
    } catch (const std::exception& e) {
      r.add({x, "evaluation", e.what()});
      continue;
    }
    for (int s = 0; s < steps; ++s) {
      int j = token(rng);
      Rational step = dyadic(rng, 12, 1, 64);
      auto q = nudge(g, x, j, step, rng);
      if (!q) continue;
      Configuration y = x;
      y[j] = *q;
      Rational moved = shortest_distance(g, x[j], y[j]);
      if (moved == 0) continue;
      ++r.samples;
      Point fy;
      try {
        fy = f.evaluate(y);
      } catch (const std::exception& e) {
        r.add({y, "evaluation", e.what()});
        break;
      }
      double ratio = to_double(shortest_distance(g, fx, fy)) / to_double(moved);
      r.max_ratio = std::max(r.max_ratio, ratio);
      if (ratio > lipschitz + 1e-9) {
        r.add({y, "continuity", "ratio " + std::to_string(ratio) + " after moving token " + std::to_string(j + 1)});
      }
      x = std::move(y);
      fx = fy;
    }
  }
  return r;
}

VerificationReport verify_transition_consistency(const IdentifyingFunction& f, int trials, std::uint64_t seed) {
  VerificationReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const Graph& g = f.graph();
  int n = f.n();
  auto check = [&](bool good, const Configuration& x, const std::string& what) {
    if (good) {
      ++r.transition_pass;
    } else {
      ++r.transition_fail;
      r.add({x, "transition", what});
    }
  };
  auto label = [&](const Configuration& x) { return component_of_value(g, x, f.evaluate(x)); };
  auto in_row = [](const TransitionRelation& rel, int from, int to) {
    const auto& row = rel.rows.at(from);
    return std::find(row.begin(), row.end(), to) != row.end();
  };

  // Random Type I steps: one token slides inside its edge or leaves its vertex.
  for (int t = 0; t < trials; ++t) {
    Configuration x = random_configuration(g, n, rng);
    std::uniform_int_distribution<int> token(0, n - 1);
    int j = token(rng);
    Rational step = dyadic(rng, 12, 1, 64);
    Configuration y = x;
    std::optional<Departure> dep;
    if (x[j].is_vertex()) {
      const auto& inc = g.incidences(x[j].id);
      std::uniform_int_distribution<std::size_t> pick(0, inc.size() - 1);
      const auto& in = inc[pick(rng)];
      y[j] = Point::on_edge(in.edge, in.end == 0 ? step : Rational(1 - step));
      dep = Departure{in.edge, in.end == 0};
    } else {
      Rational t = x[j].t + (rng() % 2 ? step : Rational(-step));
      if (t <= 0 || t >= 1) continue;
      y[j] = Point::on_edge(x[j].id, t);
    }
    bool blocked = false;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      Rational detour = shortest_distance(g, x[k], x[j]) + shortest_distance(g, x[k], y[j]) -
                        shortest_distance(g, x[j], y[j]);
      if (detour < 2 * kMinGap) blocked = true;
    }
    if (blocked) continue;
    try {
      TypeIMove m{x, y, std::vector<std::optional<Departure>>(n)};
      m.departures[j] = dep;
      auto rel = type1_transition(g, m);
      check(in_row(rel, label(x), label(y)), y, "type I step");
    } catch (const std::exception& e) {
      check(false, y, std::string("type I step: ") + e.what());
    }
  }

  // Walks along skeleton edges, split into their Type I and Type II legs.
  bool has_complex = !g.is_circle_convention() && !g.branched_vertices().empty();
  if (!has_complex) return r;
  Skeleton s = one_skeleton(g, n);
  std::vector<int> with_edges;
  for (int u = 0; u < static_cast<int>(s.nodes.size()); ++u) {
    if (!s.incident[u].empty()) with_edges.push_back(u);
  }
  if (with_edges.empty()) return r;
  std::uniform_int_distribution<std::size_t> start(0, with_edges.size() - 1);
  int node = with_edges[start(rng)];
  for (int t = 0; t < trials; ++t) {
    const auto& inc = s.incident[node];
    std::uniform_int_distribution<std::size_t> pick(0, inc.size() - 1);
    const auto& se = s.edges[inc[pick(rng)]];
    Configuration p = realize_vertex(g, s.nodes[se.minus]);
    Configuration q = realize_vertex(g, s.nodes[se.plus]);
    const auto [oe, mover] = se.face.moving[0];
    try {
      if (node == se.minus) {
        Configuration m = q;
        m[mover - 1] = Point::on_edge(oe.edge, midpoint(p[mover - 1].t, oe.forward ? Rational(1) : Rational(0)));
        auto leg1 = type1_transition(g, make_type1(g, p, m));
        auto leg2 = type2_transition(g, make_type2(g, m, mover - 1, oe));
        int a = label(p), b = label(m), c = label(q);
        check(in_row(leg1, a, b), m, "type I leg into " + s.node_ids[se.plus]);
        check(in_row(leg2, b, c), q, "type II leg into " + s.node_ids[se.plus]);
        node = se.plus;
      } else {
        auto rel = skeleton_edge_relation(g, se.face, Direction::out_of_vertex);
        check(in_row(rel, label(q), label(p)), p, "departure to " + s.node_ids[se.minus]);
        node = se.minus;
      }
    } catch (const std::exception& e) {
      check(false, p, std::string("skeleton step: ") + e.what());
      node = se.minus;
    }
  }
  return r;
}

std::vector<Component> oracle_components(const Graph& g, const Configuration& x, int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  std::vector<char> vertex_token(g.vertex_count(), 0);
  std::vector<std::vector<Rational>> tokens(g.edge_count());
  for (const auto& p : x) {
    if (p.is_vertex()) {
      vertex_token[p.id] = 1;
    } else {
      tokens[p.id].push_back(p.t);
    }
  }
  // Atoms: vertices, then per edge the grid/token breakpoints and open cells.
  struct Cell {
    int edge;
    Rational lo, hi;
    bool open_left;  // lo is an interior non-token point
  };
  std::vector<Cell> cells;
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto fresh = [&]() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  std::vector<int> cell_atom;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<Rational> marks;
    for (int k = 0; k <= resolution; ++k) marks.push_back(frac(k, resolution));
    marks.insert(marks.end(), tokens[e].begin(), tokens[e].end());
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    auto blocked = [&](const Rational& t) {
      if (t == 0) return static_cast<bool>(vertex_token[g.edge(e).tail]);
      if (t == 1) return static_cast<bool>(vertex_token[g.edge(e).head]);
      return std::find(tokens[e].begin(), tokens[e].end(), t) != tokens[e].end();
    };
    int prev = -1;  // atom of the last open cell when its right end is passable
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
      int atom = fresh();
      const Rational& lo = marks[i];
      cells.push_back({e, lo, marks[i + 1], lo != 0 && !blocked(lo)});
      cell_atom.push_back(atom);
      if (!blocked(lo)) {
        if (lo == 0) {
          join(atom, g.edge(e).tail);
        } else if (prev >= 0) {
          join(atom, prev);
        }
      }
      prev = atom;
      if (marks[i + 1] == 1 && !blocked(1)) join(atom, g.edge(e).head);
    }
  }
  std::map<int, Component> by_root;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& c = by_root[find(cell_atom[i])];
    if (cells[i].open_left && !c.pieces.empty() && c.pieces.back().edge == cells[i].edge &&
        c.pieces.back().hi == cells[i].lo) {
      c.pieces.back().hi = cells[i].hi;
    } else {
      c.pieces.push_back({cells[i].edge, cells[i].lo, cells[i].hi});
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!vertex_token[v]) by_root[find(v)].vertices.push_back(v);
  }
  std::vector<Component> out;
  for (auto& [root, c] : by_root) {
    c.canonicalize();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json report_to_json(const Graph& g, const VerificationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"kind", x.kind}, {"detail", x.detail}, {"configuration", configuration_to_json(g, x.x)}});
  }
  return {{"seed", r.seed},
          {"samples", r.samples},
          {"violation_count", r.violation_count},
          {"violations", v},
          {"continuity", {{"max_ratio", r.max_ratio}, {"lipschitz", r.lipschitz}}},
          {"transition_checks", {{"pass", r.transition_pass}, {"fail", r.transition_fail}}},
          {"ok", r.ok()}};
}

}  // namespace confsect
