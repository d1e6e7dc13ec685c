#pragma once

#include "confsect/complex.hpp"
#include "confsect/geometry.hpp"

#include <optional>
#include <vector>

namespace confsect {

// A vertex token leaving along `edge` from its tail end (or head end).
struct Departure {
  int edge = 0;
  bool from_tail = true;
};

// Straight-line motion in which no token enters a vertex.
struct TypeIMove {
  Configuration source;
  Configuration target;
  std::vector<std::optional<Departure>> departures;  // per token
};

// One token moves from an edge interior onto the head of `toward`.
struct TypeIIMove {
  int token = 0;  // 0-based
  OrientedEdge toward;
  Configuration source;
  Configuration target;
};

struct TransitionRelation {
  std::vector<Component> sources;
  std::vector<Component> targets;
  std::vector<std::vector<int>> rows;  // per source, sorted target indices
};

class TransitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Infers departures; a token alone on a loop leaves from the nearer side.
TypeIMove make_type1(const Graph& g, Configuration source, Configuration target);
void check_type1(const Graph& g, const TypeIMove& m);
TypeIIMove make_type2(const Graph& g, const Configuration& source, int token, OrientedEdge toward);

TransitionRelation type1_transition(const Graph& g, const TypeIMove& m);
TransitionRelation type2_transition(const Graph& g, const TypeIIMove& m);

// Set-wise composition a then b; a.targets must equal b.sources.
TransitionRelation compose(const TransitionRelation& a, const TransitionRelation& b);

enum class Direction { into_vertex, out_of_vertex };

// Relation along a 1-face. For into_vertex the mover stops first at
// `approach` (default: halfway between its F- slot and the vertex).
TransitionRelation skeleton_edge_relation(const Graph& g, const Face& one_face, Direction dir,
                                          const std::optional<Rational>& approach = std::nullopt);

// Open interval of valid approach parameters for the 1-face.
std::pair<Rational, Rational> approach_segment(const Graph& g, const Face& one_face);

struct EdgeRelations {
  TransitionRelation forward;   // F- to F+
  TransitionRelation backward;  // F+ to F-
};

std::vector<EdgeRelations> skeleton_relations(const Graph& g, const Skeleton& s);

// Every Y in forward(X) has backward(Y) == {X}.
bool adjoint(const EdgeRelations& r);

}  // namespace confsect
