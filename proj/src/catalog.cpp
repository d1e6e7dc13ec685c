#include "confsect/catalog.hpp"

#include <random>

namespace confsect::catalog {

Graph interval() { return Graph({"u", "v"}, {{"e1", 0, 1}}); }

Graph star(int leaves) {
  std::vector<std::string> names{"c"};
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) {
    names.push_back("l" + std::to_string(i));
    edges.push_back({"e" + std::to_string(i), 0, i});
  }
  return Graph(std::move(names), std::move(edges));
}

Graph circle() { return Graph({"v"}, {{"e1", 0, 0}}); }

Graph lollipop() { return Graph({"v", "u"}, {{"e1", 0, 0}, {"e2", 0, 1}}); }

Graph theta() { return Graph({"a", "b"}, {{"e1", 0, 1}, {"e2", 0, 1}, {"e3", 0, 1}}); }

Graph wedge(int loops) {
  std::vector<Edge> edges;
  for (int i = 1; i <= loops; ++i) edges.push_back({"e" + std::to_string(i), 0, 0});
  return Graph({"w"}, std::move(edges));
}

Graph infinity() { return wedge(2); }

Graph dumbbell() { return Graph({"b1", "b2"}, {{"e1", 0, 0}, {"e2", 1, 1}, {"e3", 0, 1}}); }

Graph wedge_of_balloons(int balloons) {
  std::vector<std::string> names{"w"};
  std::vector<Edge> edges;
  for (int i = 1; i <= balloons; ++i) {
    names.push_back("b" + std::to_string(i));
    edges.push_back({"s" + std::to_string(i), 0, i});
    edges.push_back({"c" + std::to_string(i), i, i});
  }
  return Graph(std::move(names), std::move(edges));
}

Graph random_tree(std::uint64_t seed, int branchings) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names{"c", "l1", "l2", "l3"};
  std::vector<Edge> edges{{"e1", 0, 1}, {"e2", 0, 2}, {"e3", 0, 3}};
  std::vector<int> degree{3, 1, 1, 1};
  auto add_leaf = [&](int at) {
    int v = static_cast<int>(names.size());
    names.push_back("l" + std::to_string(v));
    edges.push_back({"e" + std::to_string(edges.size() + 1), at, v});
    degree.push_back(1);
    ++degree[at];
  };
  for (int step = 0; step < branchings; ++step) {
    int v = static_cast<int>(rng() % names.size());
    if (degree[v] == 1) {
      // a leaf must gain two children to avoid degree 2
      add_leaf(v);
      add_leaf(v);
    } else {
      add_leaf(v);
    }
  }
  return Graph(std::move(names), std::move(edges));
}

std::vector<Entry> standard() {
  return {
      {"interval", interval()},
      {"star_3", star(3)},
      {"circle", circle()},
      {"lollipop", lollipop()},
      {"theta", theta()},
      {"infinity", infinity()},
      {"dumbbell", dumbbell()},
      {"wedge_3", wedge(3)},
      {"wedge_4", wedge(4)},
      {"wedge_of_balloons_3", wedge_of_balloons(3)},
      {"tree_a", random_tree(11, 2)},
      {"tree_b", random_tree(12, 3)},
  };
}

Graph by_name(const std::string& name) {
  if (name == "balloon") return lollipop();
  for (auto& entry : standard()) {
    if (entry.name == name) return entry.graph;
  }
  throw GraphError("unknown catalog graph: " + name);
}

}  // namespace confsect::catalog
