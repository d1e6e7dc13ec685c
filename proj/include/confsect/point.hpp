#pragma once

#include "confsect/rational.hpp"

#include <compare>
#include <vector>

namespace confsect {

// A location on a graph: a vertex, or an interior point of an edge at
// parameter t in (0,1) measured along the edge's positive orientation.
struct Point {
  enum class Kind { vertex, edge };

  Kind kind = Kind::vertex;
  int id = 0;
  Rational t = 0;

  static Point at_vertex(int v) { return Point{Kind::vertex, v, 0}; }
  static Point on_edge(int e, Rational t) { return Point{Kind::edge, e, std::move(t)}; }

  bool is_vertex() const { return kind == Kind::vertex; }
  bool is_edge() const { return kind == Kind::edge; }

  bool operator==(const Point& o) const {
    if (kind != o.kind || id != o.id) return false;
    return kind == Kind::vertex || t == o.t;
  }
  bool operator<(const Point& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (id != o.id) return id < o.id;
    return kind == Kind::edge && t < o.t;
  }
};

using Configuration = std::vector<Point>;

}  // namespace confsect
