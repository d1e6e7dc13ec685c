#include "doctest.h"

#include "confsect/catalog.hpp"
#include "confsect/graph.hpp"
#include "oracles/oracles.hpp"

#include <random>

using namespace confsect;

TEST_CASE("theta loads with two vertices and three edges") {
  Graph g = catalog::theta();
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(euler_characteristic(g) == -1);
}

TEST_CASE("single loop is accepted, degree-2 path is rejected") {
  CHECK_NOTHROW(catalog::circle());
  CHECK_THROWS_AS(Graph({"a", "b", "c"}, {{"e1", 0, 1}, {"e2", 1, 2}}), GraphError);
  CHECK_THROWS_AS(Graph({"a", "b", "c"}, {{"e1", 0, 1}}), GraphError);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(catalog::star(3)) == 1);
  CHECK(euler_characteristic(catalog::circle()) == 0);
  CHECK(euler_characteristic(catalog::wedge(3)) == -2);
}

TEST_CASE("suppress degree 2") {
  Graph path = suppress_degree2({"a", "b", "c"}, {{"e1", 0, 1}, {"e2", 1, 2}});
  CHECK(path.vertex_count() == 2);
  CHECK(path.edge_count() == 1);
  Graph ring = suppress_degree2({"a", "b", "c"}, {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 0}});
  CHECK(ring.is_circle_convention());
}

TEST_CASE("core reduction") {
  auto balloon = core_reduction(catalog::lollipop());
  CHECK(balloon.core.is_circle_convention());
  CHECK(balloon.collapsed.at("u") == "v");
  CHECK(balloon.collapsed.at("e2") == "v");

  auto theta = core_reduction(catalog::theta());
  CHECK(theta.core.edge_count() == 3);
  CHECK(theta.collapsed.empty());

  // dumbbell plus a pendant tree of two levels at b1
  Graph g({"b1", "b2", "p", "q1", "q2"},
          {{"e1", 0, 0}, {"e2", 1, 1}, {"e3", 0, 1}, {"e4", 0, 2}, {"e5", 2, 3}, {"e6", 2, 4}});
  auto red = core_reduction(g);
  CHECK(classify_core(red.core) == CoreClass::dumbbell);
  CHECK(red.collapsed.size() == 6);
  CHECK(red.collapsed.at("q2") == "b1");
  CHECK(euler_characteristic(red.core) == euler_characteristic(g));

  CHECK_THROWS_AS(core_reduction(catalog::star(3)), GraphError);
}

TEST_CASE("classify core") {
  CHECK(classify_core(catalog::infinity()) == CoreClass::infinity);
  CHECK(classify_core(catalog::theta()) == CoreClass::theta);
  CHECK(classify_core(catalog::dumbbell()) == CoreClass::dumbbell);
  CHECK(classify_core(catalog::wedge(3)) == CoreClass::other);
  CHECK(classify_core(catalog::circle()) == CoreClass::circle);
}

TEST_CASE("maximal subtree complement has 1 - chi edges") {
  for (const auto& entry : catalog::standard()) {
    auto tree = maximal_subtree(entry.graph);
    CHECK(entry.graph.edge_count() - static_cast<int>(tree.size()) == 1 - euler_characteristic(entry.graph));
    auto all = oracle::spanning_trees(entry.graph);
    CHECK(std::find(all.begin(), all.end(), tree) != all.end());
  }
  auto dumbbell_trees = oracle::spanning_trees(catalog::dumbbell());
  REQUIRE(dumbbell_trees.size() == 1);
  CHECK(maximal_subtree(catalog::dumbbell()) == std::set<int>{2});
}

TEST_CASE("shortest distance examples") {
  Graph theta = catalog::theta();
  CHECK(shortest_distance(theta, Point::on_edge(0, frac(1, 2)), Point::on_edge(1, frac(1, 2))) == 1);
  CHECK(shortest_distance(theta, Point::at_vertex(0), Point::at_vertex(0)) == 0);
  Graph loop = catalog::circle();
  CHECK(shortest_distance(loop, Point::on_edge(0, frac(1, 10)), Point::on_edge(0, frac(9, 10))) ==
        frac(1, 5));
}

namespace {

Point random_grid_point(const Graph& g, std::mt19937_64& rng, int res) {
  int slot = static_cast<int>(rng() % (g.vertex_count() + g.edge_count() * (res - 1)));
  if (slot < g.vertex_count()) return Point::at_vertex(slot);
  slot -= g.vertex_count();
  return Point::on_edge(slot / (res - 1), Rational(slot % (res - 1) + 1, res));
}

}  // namespace

TEST_CASE("distance agrees with a subdivision oracle and is a metric") {
  std::mt19937_64 rng(7);
  for (const auto& entry : catalog::standard()) {
    const Graph& g = entry.graph;
    oracle::SubdividedMetric metric(g, 8);
    for (int trial = 0; trial < 200; ++trial) {
      Point p = random_grid_point(g, rng, 8);
      Point q = random_grid_point(g, rng, 8);
      Point r = random_grid_point(g, rng, 8);
      Rational pq = shortest_distance(g, p, q);
      CHECK(to_double(pq) == doctest::Approx(metric.distance(p, q)));
      CHECK(pq == shortest_distance(g, q, p));
      CHECK((pq == 0) == (p == q));
      CHECK(shortest_distance(g, p, r) <= pq + shortest_distance(g, q, r));
    }
  }
}
