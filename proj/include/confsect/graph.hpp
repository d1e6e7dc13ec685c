#pragma once

#include "confsect/point.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace confsect {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::string name;
  int tail = 0;
  int head = 0;
  bool is_loop() const { return tail == head; }
};

// One end of an edge as seen from a vertex. end == 0 is the tail end.
struct Incidence {
  int edge = 0;
  int end = 0;
};

// Finite connected graph with unit edge lengths. Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Validates connectivity and the degree-2 rule unless allow_degree2 is set.
  Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges, bool allow_degree2 = false);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  int vertex_index(const std::string& name) const;
  int edge_index(const std::string& name) const;

  int degree(int v) const { return static_cast<int>(incidences_.at(v).size()); }
  const std::vector<Incidence>& incidences(int v) const { return incidences_.at(v); }
  bool is_branched(int v) const { return degree(v) >= 3; }
  bool is_free(int v) const { return degree(v) == 1; }
  std::vector<int> branched_vertices() const;
  // The single-vertex single-loop graph.
  bool is_circle_convention() const;

  int endpoint(int e, int end) const { return end == 0 ? edges_[e].tail : edges_[e].head; }
  int other_end(int e, int v) const;

  // Combinatorial distance between vertices (number of edges).
  int vertex_distance(int a, int b) const { return vdist_[a][b]; }

  // Next vertex and edge on a fixed shortest vertex path from a toward b.
  Incidence step_toward(int a, int b) const;

  Point normalize(Point p) const;
  void check_point(const Point& p) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidences_;
  std::vector<std::vector<int>> vdist_;
  std::map<std::string, int> vertex_ids_;
  std::map<std::string, int> edge_ids_;
};

int euler_characteristic(const Graph& g);

Rational shortest_distance(const Graph& g, const Point& p, const Point& q);

bool is_bridge(const Graph& g, int e);

// Spanning tree edge indices.
std::set<int> maximal_subtree(const Graph& g);

// Merges edges through every degree-2 vertex; a cycle collapses to one loop.
Graph suppress_degree2(const std::vector<std::string>& vertex_names, const std::vector<Edge>& edges);

struct CoreReduction {
  Graph core;
  // Removed vertex or edge name -> name of the input vertex its tree hangs from.
  std::map<std::string, std::string> collapsed;
};

CoreReduction core_reduction(const Graph& g);

enum class CoreClass { circle, infinity, theta, dumbbell, other };

CoreClass classify_core(const Graph& g);
const char* to_string(CoreClass c);

}  // namespace confsect
