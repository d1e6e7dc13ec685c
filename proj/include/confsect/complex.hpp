#pragma once

#include "confsect/graph.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace confsect {

// Edge traversed toward its head (forward) or toward its tail.
struct OrientedEdge {
  int edge = 0;
  bool forward = true;

  int head(const Graph& g) const { return forward ? g.edge(edge).head : g.edge(edge).tail; }
  int tail(const Graph& g) const { return forward ? g.edge(edge).tail : g.edge(edge).head; }
  bool operator==(const OrientedEdge& o) const { return edge == o.edge && forward == o.forward; }
  bool operator<(const OrientedEdge& o) const {
    return edge != o.edge ? edge < o.edge : (forward && !o.forward);
  }
};

// A cell of the cube complex. Token indices are 1-based.
struct Face {
  std::vector<std::vector<int>> on_edge;  // per edge, in positive order
  std::vector<int> at_vertex;             // per vertex, 0 when empty
  std::vector<std::pair<OrientedEdge, int>> moving;  // sorted by oriented edge

  int dim() const { return static_cast<int>(moving.size()); }
  int token_count() const;
  std::string id(const Graph& g) const;
  bool operator==(const Face& o) const {
    return on_edge == o.on_edge && at_vertex == o.at_vertex && moving == o.moving;
  }
};

Face empty_face(const Graph& g);

// Throws unless the face satisfies all structural conditions.
void check_face(const Graph& g, const Face& f, int n);

std::vector<Face> enumerate_faces(const Graph& g, int n, int k);

// (F+, F-) for the moving slot at position slot of f.moving.
std::pair<Face, Face> boundary(const Graph& g, const Face& f, int slot);

Configuration realize_vertex(const Graph& g, const Face& f);

// Point of the cube of f with mover progress s[i] in [0,1] for f.moving[i].
// s = 0 realizes F- and s = 1 realizes F+ on that coordinate.
Configuration realize_cube(const Graph& g, const Face& f, const std::vector<Rational>& s);

// The 0-face whose realization is x, if x is evenly spaced with branched vertex tokens only.
Face face_of_configuration(const Graph& g, const Configuration& x);

struct SkeletonEdge {
  Face face;  // the 1-face
  int minus = 0;  // node of F-
  int plus = 0;   // node of F+ (mover at the vertex)
};

struct Skeleton {
  std::vector<Face> nodes;
  std::vector<std::string> node_ids;
  std::vector<SkeletonEdge> edges;
  std::vector<std::vector<int>> incident;  // node -> skeleton edge indices
  std::vector<int> component;              // node -> component index
  int component_count = 0;
  std::unordered_map<std::string, int> index;
};

Skeleton one_skeleton(const Graph& g, int n);

struct ComplexStats {
  std::vector<long long> cells;
  long long euler = 0;
  int dim = 0;
  int skeleton_components = 0;
};

ComplexStats complex_stats(const Graph& g, int n);

std::string skeleton_dot(const Graph& g, const Skeleton& s);

}  // namespace confsect
