#pragma once

#include "confsect/graph.hpp"

#include <optional>
#include <vector>

namespace confsect {

// Open sub-interval (lo, hi) of an edge, in edge parameters.
struct Piece {
  int edge = 0;
  Rational lo;
  Rational hi;

  bool operator==(const Piece& o) const { return edge == o.edge && lo == o.lo && hi == o.hi; }
  bool operator<(const Piece& o) const {
    if (edge != o.edge) return edge < o.edge;
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
};

// A connected component of G minus a configuration, in sorted canonical form.
struct Component {
  std::vector<Piece> pieces;
  std::vector<int> vertices;

  bool operator==(const Component& o) const { return pieces == o.pieces && vertices == o.vertices; }
  bool operator!=(const Component& o) const { return !(*this == o); }
  bool operator<(const Component& o) const {
    if (pieces != o.pieces) return pieces < o.pieces;
    return vertices < o.vertices;
  }

  bool contains(const Point& p) const;
  bool is_interval() const { return vertices.empty() && pieces.size() == 1; }
  void canonicalize();
};

void check_configuration(const Graph& g, const Configuration& x);

std::vector<Component> complement_components(const Graph& g, const Configuration& x);

// Index into comps of the component containing p; throws if p is a token.
int component_index(const std::vector<Component>& comps, const Point& p);
const Component& component_of(const std::vector<Component>& comps, const Point& p);

// True iff q lies in the closure of c.
bool borders(const Graph& g, const Component& c, const Point& q);

// True iff c, plus the bordering point extra if given, contains no cycle.
bool is_simply_connected(const Graph& g, const Component& c, const std::optional<Point>& extra);

// Point at distance s from p along a fixed shortest path toward q (0 <= s <= d(p,q)).
Point point_along(const Graph& g, const Point& p, const Point& q, const Rational& s);

// Midpoint of a piece as a point.
inline Point piece_midpoint(const Piece& piece) { return Point::on_edge(piece.edge, midpoint(piece.lo, piece.hi)); }

}  // namespace confsect
