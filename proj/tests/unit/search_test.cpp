#include "doctest.h"

#include "confsect/catalog.hpp"
#include "confsect/json_io.hpp"
#include "confsect/predict.hpp"
#include "confsect/search.hpp"

using namespace confsect;

namespace {

SearchOptions with_pairs(bool on, std::uint64_t seed = 0) {
  SearchOptions o;
  o.pairs = on;
  o.seed = seed;
  return o;
}

Component comp_at(const Graph& g, const Configuration& x, const Point& p) {
  return component_of(complement_components(g, x), p);
}

TraceNode* first_with_prunes(TraceNode& t) {
  if (!t.prunes.empty()) return &t;
  for (auto& [v, child] : t.branches) {
    if (auto* p = first_with_prunes(child)) return p;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("star_3, n=1: sat without pairs, flagged") {
  Graph g = catalog::star(3);
  auto c = search_consistent(g, 1, with_pairs(false));
  REQUIRE(c.result == SearchResult::sat);
  CHECK(validate_labeling(g, 1, c.labeling));
  CHECK(c.flags == std::vector<std::string>{"necessary-condition-only"});
  CHECK(predict(g, 1).verdict == Verdict::not_exists);
}

TEST_CASE("star_3, n=1: hand labeling validates and one swap breaks it") {
  Graph g = catalog::star(3);
  Configuration center{Point::at_vertex(0)};
  Labeling l;
  l["@c:1"] = comp_at(g, center, Point::on_edge(0, frac(1, 2)));
  for (int e = 0; e < 3; ++e) {
    Configuration x{Point::on_edge(e, frac(1, 2))};
    auto id = "e" + std::to_string(e + 1) + "(1)";
    l[id] = e == 0 ? comp_at(g, x, Point::at_vertex(1)) : comp_at(g, x, Point::at_vertex(0));
  }
  CHECK(validate_labeling(g, 1, l));
  l["@c:1"] = comp_at(g, center, Point::on_edge(1, frac(1, 2)));
  CHECK_FALSE(validate_labeling(g, 1, l));
}

TEST_CASE("star_3, n=1: pairs make it unsat by a dead end") {
  Graph g = catalog::star(3);
  auto c = search_consistent(g, 1, with_pairs(true));
  REQUIRE(c.result == SearchResult::unsat);
  CHECK(replay_trace(g, 1, true, c.trace).ok);
  CHECK_FALSE(replay_trace(g, 1, false, c.trace).ok);
}

TEST_CASE("single edge, n=2: trivially sat") {
  Graph g = catalog::interval();
  for (bool pairs : {false, true}) {
    auto c = search_consistent(g, 2, with_pairs(pairs));
    REQUIRE(c.result == SearchResult::sat);
    CHECK(c.labeling.size() == 2);
    CHECK(validate_labeling(g, 2, c.labeling, pairs));
  }
}

TEST_CASE("chi = -1, n = 3: unsat with replayable traces") {
  for (const char* name : {"theta", "infinity", "dumbbell"}) {
    CAPTURE(name);
    Graph g = catalog::by_name(name);
    for (bool pairs : {true, false}) {
      auto c = search_consistent(g, 3, with_pairs(pairs));
      REQUIRE(c.result == SearchResult::unsat);
      auto r = replay_trace(g, 3, pairs, c.trace);
      CHECK_MESSAGE(r.ok, r.error);
    }
  }
}

TEST_CASE("replay rejects tampered traces") {
  Graph g = catalog::theta();
  auto c = search_consistent(g, 3, with_pairs(true));
  REQUIRE(c.result == SearchResult::unsat);

  auto dropped = c.trace;
  TraceNode* t = first_with_prunes(dropped);
  REQUIRE(t != nullptr);
  t->prunes.erase(t->prunes.begin());
  CHECK_FALSE(replay_trace(g, 3, true, dropped).ok);

  auto no_end = c.trace;
  no_end.wipeout = -1;
  no_end.split = -1;
  no_end.branches.clear();
  CHECK_FALSE(replay_trace(g, 3, true, no_end).ok);

  auto short_split = c.trace;
  REQUIRE(short_split.split >= 0);
  short_split.branches.pop_back();
  CHECK_FALSE(replay_trace(g, 3, true, short_split).ok);
}

TEST_CASE("traces survive a JSON round trip") {
  Graph g = catalog::infinity();
  SearchProblem p(g, 3, true);
  auto c = search_consistent(p, with_pairs(true));
  REQUIRE(c.result == SearchResult::unsat);
  auto j = trace_to_json(p.skeleton, c.trace);
  auto back = trace_from_json(p.skeleton, Json::parse(j.dump()));
  CHECK(trace_to_json(p.skeleton, back) == j);
  CHECK(replay_trace(g, 3, true, back).ok);
}

TEST_CASE("determinism: identical certificates") {
  for (const char* name : {"theta", "lollipop"}) {
    Graph g = catalog::by_name(name);
    Skeleton s = one_skeleton(g, 2);
    auto a = certificate_to_json(g, s, search_consistent(g, 2, with_pairs(true, 5))).dump();
    auto b = certificate_to_json(g, s, search_consistent(g, 2, with_pairs(true, 5))).dump();
    CHECK(a == b);
  }
}

TEST_CASE("budget exhaustion is inconclusive") {
  Graph g = catalog::theta();
  SearchOptions o;
  o.budget = 10;
  auto c = search_consistent(g, 3, o);
  CHECK(c.result == SearchResult::inconclusive);
  CHECK(c.labeling.empty());
  CHECK(c.trace.prunes.empty());
}

TEST_CASE("cross-check: randomized restarts never contradict the main run") {
  struct Case {
    const char* name;
    int n;
  };
  for (auto [name, n] : {Case{"theta", 2}, Case{"theta", 3}, Case{"dumbbell", 2}, Case{"wedge_3", 2}}) {
    CAPTURE(name);
    Graph g = catalog::by_name(name);
    SearchProblem p(g, n, false);
    auto main = search_consistent(p, with_pairs(false));
    for (std::uint64_t seed = 1; seed <= 32; ++seed) {
      auto c = search_consistent(p, with_pairs(false, seed));
      CHECK(c.result == main.result);
      if (c.result == SearchResult::sat) CHECK(validate_labeling(g, n, c.labeling));
    }
  }
}

TEST_CASE("monotonicity: labelings found with pairs are valid without") {
  for (const char* name : {"theta", "infinity", "lollipop", "wedge_3", "star_3"}) {
    CAPTURE(name);
    Graph g = catalog::by_name(name);
    auto c = search_consistent(g, 2, with_pairs(true));
    REQUIRE(c.result == SearchResult::sat);
    CHECK(validate_labeling(g, 2, c.labeling, true));
    CHECK(validate_labeling(g, 2, c.labeling, false));
  }
}

TEST_CASE("validate_labeling: mutations of a sat labeling") {
  Graph g = catalog::theta();
  auto c = search_consistent(g, 2, with_pairs(false));
  REQUIRE(c.result == SearchResult::sat);
  Skeleton s = one_skeleton(g, 2);
  int broken = 0, tried = 0;
  for (std::size_t u = 0; u < s.nodes.size(); ++u) {
    auto comps = complement_components(g, realize_vertex(g, s.nodes[u]));
    for (const auto& other : comps) {
      if (other == c.labeling.at(s.node_ids[u])) continue;
      auto l = c.labeling;
      l[s.node_ids[u]] = other;
      ++tried;
      if (!validate_labeling(g, 2, l)) ++broken;
    }
  }
  CHECK(tried > 0);
  CHECK(broken > 0);
  auto missing = c.labeling;
  missing.erase(missing.begin());
  CHECK_FALSE(validate_labeling(g, 2, missing));
}

TEST_CASE("check_pairs") {
  CHECK_FALSE(check_pairs({{1, 2, 0}, {3, 4, 1}}).consistent);
  CHECK(check_pairs({{1, 2, 0}, {1, 3, 1}, {1, 4, 2}}).consistent);
  // (2,3) and (3,1) on one oriented edge.
  CHECK_FALSE(check_pairs({make_pair_on(2, 3, {2, true}), make_pair_on(3, 1, {2, true})}).consistent);
  CHECK_FALSE(check_pairs({make_pair_on(2, 3, {2, false}), make_pair_on(3, 1, {2, false})}).consistent);
  CHECK(check_pairs({make_pair_on(2, 3, {2, true}), make_pair_on(3, 2, {2, true})}).consistent);
  CHECK(check_pairs({make_pair_on(2, 3, {2, true}), make_pair_on(3, 1, {1, true})}).consistent);
  CHECK(make_pair_on(1, 2, {0, false}) == DistinguishedPair{2, 1, 0});
}

TEST_CASE("extract_distinguished_pairs") {
  Graph g = catalog::theta();
  Skeleton s = one_skeleton(g, 2);
  int u = s.index.at("e1(1,2)");
  Configuration x = realize_vertex(g, s.nodes[u]);
  auto c = search_consistent(g, 2, with_pairs(false));
  REQUIRE(c.result == SearchResult::sat);
  Labeling l = c.labeling;
  l["e1(1,2)"] = comp_at(g, x, Point::on_edge(0, frac(1, 2)));
  auto pairs = extract_distinguished_pairs(g, 2, Labeling{{"e1(1,2)", l["e1(1,2)"]}});
  CHECK(pairs == std::vector<DistinguishedPair>{{1, 2, 0}});
  CHECK(extract_distinguished_pairs(g, 2, Labeling{{"e1(1,2)", comp_at(g, x, Point::at_vertex(0))}}).empty());
  // Bridges never carry pairs.
  Graph star = catalog::star(3);
  Configuration y = realize_vertex(star, one_skeleton(star, 2).nodes[one_skeleton(star, 2).index.at("e1(1,2)")]);
  CHECK(extract_distinguished_pairs(star, 2, Labeling{{"e1(1,2)", comp_at(star, y, Point::on_edge(0, frac(1, 2)))}})
            .empty());
}

TEST_CASE("pair groups: witnesses force the interval between the tokens") {
  Graph g = catalog::theta();
  Skeleton s = one_skeleton(g, 2);
  auto comps = node_components(g, s);
  auto groups = pair_groups(g, s, comps);
  REQUIRE(!groups.empty());
  for (const auto& grp : groups) {
    CHECK(grp.key.i != grp.key.j);
    for (const auto& w : grp.witnesses) {
      const auto& c = comps[w.node][w.value];
      CHECK(c.is_interval());
      CHECK(c.pieces[0].edge == grp.key.edge);
    }
  }
  // The dumbbell's middle edge is a bridge: no key on it.
  Graph d = catalog::dumbbell();
  Skeleton sd = one_skeleton(d, 2);
  for (const auto& grp : pair_groups(d, sd, node_components(d, sd))) CHECK(grp.key.edge != 2);
}

TEST_CASE("chase") {
  Graph g = catalog::theta();
  Skeleton s = one_skeleton(g, 3);
  auto comps = node_components(g, s);
  auto rel = skeleton_relations(g, s);
  Chaser chaser(g, s, rel, comps);
  int u = s.index.at("e1(1);e2(2);e3(3)");
  Configuration x = realize_vertex(g, s.nodes[u]);

  SUBCASE("interval: pair of its bounding tokens") {
    int v = s.index.at("e1(1,2);e3(3)");
    Configuration y = realize_vertex(g, s.nodes[v]);
    auto r = chaser.chase(v, 1, component_index(comps[v], Point::on_edge(0, frac(1, 2))));
    CHECK(r.pairs == std::set<DistinguishedPair>{{1, 2, 0}});
    CHECK(r.dead_ends == 0);
  }
  SUBCASE("star around a: one pair per arm") {
    auto r = chaser.chase(u, 1, component_index(comps[u], Point::at_vertex(0)));
    CHECK(r.pairs == std::set<DistinguishedPair>{{1, 2, 1}, {1, 3, 2}});
  }
  SUBCASE("cycle through the token is rejected") {
    int v = s.index.at("e1(1,2,3)");
    CHECK_THROWS(chaser.chase(v, 1, component_index(comps[v], Point::at_vertex(0))));
  }
  SUBCASE("free vertex ends the chase") {
    Graph star = catalog::star(3);
    Skeleton ss = one_skeleton(star, 1);
    auto sc = node_components(star, ss);
    auto sr = skeleton_relations(star, ss);
    Chaser ch(star, ss, sr, sc);
    int v = ss.index.at("e1(1)");
    auto r = ch.chase(v, 1, component_index(sc[v], Point::at_vertex(1)));
    CHECK(r.dead_ends == 1);
    CHECK(r.pairs.empty());
  }
}

TEST_CASE("predict table") {
  CHECK(predict(catalog::star(3), 1).verdict == Verdict::not_exists);
  CHECK(predict(catalog::star(3), 2).verdict == Verdict::exists);
  CHECK(predict(catalog::theta(), 3).verdict == Verdict::not_exists);
  CHECK(predict(catalog::theta(), 3).cite == "Theorem 1");
  CHECK(predict(catalog::theta(), 2).verdict == Verdict::unknown);
  CHECK(predict(catalog::theta(), 1).verdict == Verdict::exists);
  CHECK(predict(catalog::wedge(3), 3).verdict == Verdict::exists);
  CHECK(predict(catalog::wedge(3), 4).verdict == Verdict::not_exists);
  CHECK(predict(catalog::lollipop(), 4).verdict == Verdict::exists);
  CHECK(predict(catalog::wedge_of_balloons(3), 3).verdict == Verdict::unknown);
  CHECK(predict(catalog::wedge_of_balloons(4), 4).verdict == Verdict::not_exists);
  CHECK(balloon_wedge_size(catalog::wedge_of_balloons(3)) == 3);
  CHECK(balloon_wedge_size(catalog::dumbbell()) == 0);
  CHECK(wedge_components(catalog::wedge(4), 0) == 4);
  CHECK(wedge_components(catalog::dumbbell(), 0) == 1);
}
