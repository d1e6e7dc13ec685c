#pragma once

#include "confsect/graph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace confsect::catalog {

Graph interval();
Graph star(int leaves);
Graph circle();
Graph lollipop();  // loop with one stem; also called the balloon
Graph theta();
Graph wedge(int loops);
Graph infinity();
Graph dumbbell();
Graph wedge_of_balloons(int balloons);
// Tree with `branchings` growth steps and no degree-2 vertex.
Graph random_tree(std::uint64_t seed, int branchings);

struct Entry {
  std::string name;
  Graph graph;
};

// Named graphs used by the CLI and the test suites.
std::vector<Entry> standard();
Graph by_name(const std::string& name);

}  // namespace confsect::catalog
