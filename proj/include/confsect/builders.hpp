#pragma once

#include "confsect/complex.hpp"
#include "confsect/json_io.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace confsect {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A continuous choice of a point avoiding every token.
class IdentifyingFunction {
 public:
  IdentifyingFunction(Graph g, int n) : g_(std::move(g)), n_(n) {}
  virtual ~IdentifyingFunction() = default;

  const Graph& graph() const { return g_; }
  int n() const { return n_; }

  virtual std::string method() const = 0;
  virtual Point evaluate(const Configuration& x) const = 0;
  // Constructor tables; rebuilding from the graph must reproduce them.
  virtual Json tables() const = 0;

  Json descriptor() const;

 protected:
  Graph g_;
  int n_;
};

using FunctionPtr = std::shared_ptr<const IdentifyingFunction>;

// Closed walk along oriented edges, read by arc length from its start vertex.
struct Circle {
  std::vector<OrientedEdge> edges;

  int length() const { return static_cast<int>(edges.size()); }
  Point at(const Graph& g, Rational arc) const;  // arc taken mod length
  // Arc position of a point on the circle; throws if it is off the circle.
  Rational arc_of(const Graph& g, const Point& p) const;
  bool contains_edge(int e) const;
};

// Retraction of G onto an embedded circle.
class CircleRetraction {
 public:
  CircleRetraction(const Graph& g, Circle c);
  const Circle& circle() const { return c_; }
  Rational arc(const Point& p) const;  // arc of r(p)
  Point apply(const Point& p) const;
  Json tables() const;

 private:
  const Graph* g_;
  Circle c_;
  std::vector<Rational> vertex_arc_;
  // Per off-circle edge: start arc and signed length of its image.
  std::vector<std::pair<Rational, Rational>> edge_image_;
};

Circle shortest_cycle(const Graph& g);

FunctionPtr build_antipode(const Graph& g);
FunctionPtr build_tree_section(const Graph& g, int n);
FunctionPtr build_chi0_section(const Graph& g, int n);
FunctionPtr build_wedge_section(const Graph& g, int w, int n);

// Value on the cube complex: face, mover progress, and the realized point y.
using CubeFunction = std::function<Point(const Face&, const std::vector<Rational>&, const Configuration&)>;

struct PartialIdentifyingFunction {
  std::map<std::string, Point> values;  // 0-face id -> value
  CubeFunction cube;                    // optional extension over whole cubes
};

PartialIdentifyingFunction tabulate(const Graph& g, int n, CubeFunction cube);

// False iff some 0-face has a token on the branched end v of a free edge e,
// no token inside e, and its value in e.
bool check_extendable(const Graph& g, int n, const PartialIdentifyingFunction& pf);

// f(x) sits between the tokens of x bordering pf's value at the cube point of
// x, in the same proportion. `extra` is stored with the tables.
FunctionPtr extend_to_full(const Graph& g, int n, PartialIdentifyingFunction pf, std::string method = "extended",
                           Json extra = Json::object());

// Continuous map Conf_n(G) -> K_n(G): a token within reach of a free branched
// vertex becomes a mover toward it.
struct CubePoint {
  Face face;
  std::vector<Rational> s;
};

CubePoint cube_coordinates(const Graph& g, const Configuration& x);

// Rebuilds from a descriptor and checks the stored tables.
FunctionPtr load_function(const Json& descriptor);

}  // namespace confsect
