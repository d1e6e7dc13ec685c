#include "doctest.h"

#include "confsect/catalog.hpp"
#include "confsect/transitions.hpp"

#include <random>
#include <set>

using namespace confsect;

namespace {

std::vector<Component> row_targets(const TransitionRelation& r, int source) {
  std::vector<Component> out;
  for (int j : r.rows[source]) out.push_back(r.targets[j]);
  return out;
}

int source_at(const TransitionRelation& r, const Point& p) { return component_index(r.sources, p); }

Face star_edge_face(const Graph& star, int edge) {
  Face f = empty_face(star);
  f.moving = {{OrientedEdge{edge, false}, 1}};  // toward the center (tail)
  return f;
}

}  // namespace

TEST_CASE("type I: token leaves the star center into e1") {
  Graph star = catalog::star(3);
  Configuration x{Point::at_vertex(0)};
  Configuration y{Point::on_edge(0, frac(1, 2))};
  auto r = type1_transition(star, make_type1(star, x, y));
  int leaf_side = source_at(r, Point::at_vertex(1));
  REQUIRE(r.rows[leaf_side].size() == 1);
  CHECK(r.targets[r.rows[leaf_side][0]].contains(Point::at_vertex(1)));
  int other = source_at(r, Point::at_vertex(2));
  CHECK(r.targets[r.rows[other][0]].contains(Point::at_vertex(0)));
}

TEST_CASE("type I: respaced interval and fixed point") {
  Graph line = catalog::interval();
  Configuration x{Point::on_edge(0, frac(1, 4)), Point::on_edge(0, frac(1, 2))};
  Configuration y{Point::on_edge(0, frac(1, 3)), Point::on_edge(0, frac(2, 3))};
  auto r = type1_transition(line, make_type1(line, x, y));
  int mid = source_at(r, Point::on_edge(0, frac(3, 8)));
  CHECK(r.targets[r.rows[mid][0]].contains(Point::on_edge(0, frac(1, 2))));
  CHECK(r.targets[r.rows[mid][0]].is_interval());
  int left = source_at(r, Point::at_vertex(0));
  CHECK(r.targets[r.rows[left][0]].contains(Point::at_vertex(0)));
  CHECK_THROWS_AS(make_type1(line, x, {Point::at_vertex(0), Point::on_edge(0, frac(1, 2))}), TransitionError);
  CHECK_THROWS_AS(make_type1(line, x, {Point::on_edge(0, frac(2, 3)), Point::on_edge(0, frac(1, 3))}),
                  TransitionError);
}

TEST_CASE("type II examples") {
  Graph star = catalog::star(3);
  Configuration x{Point::on_edge(0, frac(1, 2))};
  auto r = type2_transition(star, make_type2(star, x, 0, OrientedEdge{0, false}));
  auto t = row_targets(r, source_at(r, Point::at_vertex(1)));
  REQUIRE(t.size() == 1);
  CHECK(t[0].contains(Point::on_edge(0, frac(1, 2))));
  auto a = row_targets(r, source_at(r, Point::at_vertex(0)));
  REQUIRE(a.size() == 2);
  CHECK(a[0].contains(Point::at_vertex(2)));
  CHECK(a[1].contains(Point::at_vertex(3)));

  Graph theta = catalog::theta();
  Configuration z{Point::on_edge(0, frac(1, 2))};
  auto rt = type2_transition(theta, make_type2(theta, z, 0, OrientedEdge{0, true}));
  // G minus a vertex of theta stays connected: the only component is reachable
  REQUIRE(rt.sources.size() == 1);
  REQUIRE(rt.targets.size() == 1);
  CHECK(rt.rows[0] == std::vector<int>{0});
  // with the other vertex occupied the three open edges separate
  Configuration z2{Point::on_edge(0, frac(1, 2)), Point::at_vertex(0)};
  auto r2 = type2_transition(theta, make_type2(theta, z2, 0, OrientedEdge{0, true}));
  auto ahead = r2.rows[source_at(r2, Point::at_vertex(1))];
  REQUIRE(ahead.size() == 2);
  for (int j : ahead) CHECK(r2.targets[j].pieces.front().edge != 0);

  Configuration w{Point::on_edge(0, frac(1, 2)), Point::on_edge(2, frac(1, 2))};
  auto rw = type2_transition(star, make_type2(star, w, 0, OrientedEdge{0, false}));
  int far = source_at(rw, Point::at_vertex(3));
  CHECK(row_targets(rw, far) == std::vector<Component>{rw.sources[far]});
}

TEST_CASE("type II rejects blocked and degree-2 moves") {
  Graph line = catalog::interval();
  Configuration x{Point::on_edge(0, frac(1, 4)), Point::on_edge(0, frac(1, 2))};
  CHECK_THROWS_AS(make_type2(line, x, 0, OrientedEdge{0, true}), TransitionError);
  Graph loop = catalog::circle();
  CHECK_THROWS_AS(make_type2(loop, {Point::on_edge(0, frac(1, 2))}, 0, OrientedEdge{0, true}), TransitionError);
  // free vertex: the dying interval has an empty row
  auto r = type2_transition(line, make_type2(line, {Point::on_edge(0, frac(1, 2))}, 0, OrientedEdge{0, true}));
  CHECK(r.rows[source_at(r, Point::at_vertex(1))].empty());
}

TEST_CASE("skeleton edge relation on star_3 with one token") {
  Graph star = catalog::star(3);
  Face f = star_edge_face(star, 0);
  auto fwd = skeleton_edge_relation(star, f, Direction::into_vertex);
  auto free_side = row_targets(fwd, source_at(fwd, Point::at_vertex(1)));
  REQUIRE(free_side.size() == 1);
  CHECK(free_side[0].contains(Point::on_edge(0, frac(1, 2))));
  auto big = row_targets(fwd, source_at(fwd, Point::at_vertex(0)));
  CHECK(big.size() == 2);
  auto bwd = skeleton_edge_relation(star, f, Direction::out_of_vertex);
  for (const auto& row : bwd.rows) CHECK(row.size() == 1);
  CHECK(adjoint({fwd, bwd}));
}

TEST_CASE("adjointness on K_2 of the catalog; type I rows are total and onto") {
  for (const auto& entry : catalog::standard()) {
    const Graph& g = entry.graph;
    if (g.is_circle_convention()) continue;
    Skeleton s = one_skeleton(g, 2);
    auto rel = skeleton_relations(g, s);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      CHECK_MESSAGE(adjoint(rel[i]), entry.name << " " << s.edges[i].face.id(g));
      std::set<int> hit;
      for (const auto& row : rel[i].backward.rows) {
        REQUIRE(row.size() == 1);
        hit.insert(row[0]);
      }
      CHECK(hit.size() == rel[i].backward.targets.size());
    }
  }
}

TEST_CASE("type I respacing without departures is a bijection on K_2") {
  for (const auto& entry : catalog::standard()) {
    const Graph& g = entry.graph;
    if (g.is_circle_convention()) continue;
    for (const auto& f : enumerate_faces(g, 2, 1)) {
      auto [plus, minus] = boundary(g, f, 0);
      Configuration p = realize_vertex(g, minus);
      Configuration m = realize_vertex(g, plus);
      int token = f.moving[0].second - 1;
      auto [lo, hi] = approach_segment(g, f);
      m[token] = Point::on_edge(f.moving[0].first.edge, midpoint(lo, hi));
      auto r = type1_transition(g, make_type1(g, p, m));
      std::multiset<int> images;
      for (const auto& row : r.rows) {
        REQUIRE(row.size() == 1);
        images.insert(row[0]);
      }
      CHECK(r.sources.size() == r.targets.size());
      CHECK(std::set<int>(images.begin(), images.end()).size() == r.targets.size());
    }
  }
}

TEST_CASE("relation does not depend on the approach point") {
  std::mt19937_64 rng(17);
  for (const char* name : {"theta", "dumbbell", "infinity", "star_3", "lollipop"}) {
    Graph g = catalog::by_name(name);
    for (const auto& f : enumerate_faces(g, 2, 1)) {
      auto base = skeleton_edge_relation(g, f, Direction::into_vertex);
      auto [lo, hi] = approach_segment(g, f);
      for (int trial = 0; trial < 5; ++trial) {
        Rational u(static_cast<long>(rng() % 1000 + 1), 1002);
        Rational stop = lo + (hi - lo) * u;
        CHECK(skeleton_edge_relation(g, f, Direction::into_vertex, stop).rows == base.rows);
      }
    }
  }
}
