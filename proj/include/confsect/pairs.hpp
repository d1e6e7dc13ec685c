#pragma once

#include "confsect/transitions.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace confsect {

// Ordered index pair (1-based) on an edge read in its positive orientation:
// token i sits before token j.
struct DistinguishedPair {
  int i = 0;
  int j = 0;
  int edge = 0;

  bool operator==(const DistinguishedPair& o) const { return i == o.i && j == o.j && edge == o.edge; }
  bool operator<(const DistinguishedPair& o) const {
    return std::tie(edge, i, j) < std::tie(o.edge, o.i, o.j);
  }
};

// (i, j) on an oriented edge, rewritten in positive orientation.
DistinguishedPair make_pair_on(int i, int j, OrientedEdge e);

std::string to_string(const Graph& g, const DistinguishedPair& p);

struct PairVerdict {
  bool consistent = true;
  std::string reason;
};

// Inconsistent if two pairs share no index, or (i,j) and (k,i) lie on one
// oriented edge with j != k.
PairVerdict check_pairs(const std::vector<DistinguishedPair>& pairs);

struct Witness {
  int node = 0;
  int value = 0;  // index into the node's complement components
};

// All 0-faces satisfying (a)-(c) for one pair on a non-bridge edge.
struct PairGroup {
  DistinguishedPair key;
  std::vector<Witness> witnesses;
};

using NodeComponents = std::vector<std::vector<Component>>;

NodeComponents node_components(const Graph& g, const Skeleton& s);

std::vector<PairGroup> pair_groups(const Graph& g, const Skeleton& s, const NodeComponents& comps);

// Keys that cannot both be distinguished pairs.
std::vector<std::pair<int, int>> incompatible_groups(const std::vector<PairGroup>& groups);

// A token alone between itself and a free vertex: the component holding the
// free vertex can never carry the value.
struct DeadEnd {
  int node = 0;
  int value = 0;
  int token = 0;  // 1-based
  int free_vertex = 0;
};

std::vector<DeadEnd> dead_ends(const Graph& g, const Skeleton& s, const NodeComponents& comps);

struct ChaseResult {
  std::set<DistinguishedPair> pairs;
  int bridge_intervals = 0;  // terminal intervals on bridges (no pair)
  int dead_ends = 0;
};

// Moves `token` (1-based) into X = comps[node][value] along skeleton moves,
// branching over every admissible image, until each branch ends in an
// interval or at a free vertex.
class Chaser {
 public:
  Chaser(const Graph& g, const Skeleton& s, const std::vector<EdgeRelations>& rel, const NodeComponents& comps);

  ChaseResult chase(int node, int token, int value);

 private:
  const Graph& g_;
  const Skeleton& s_;
  const std::vector<EdgeRelations>& rel_;
  const NodeComponents& comps_;
  std::vector<Configuration> configs_;
  std::map<std::tuple<int, int, int>, ChaseResult> memo_;

  ChaseResult run(int node, int token, int value, int depth);
  int find_edge(int node, OrientedEdge oe, int token, bool node_is_minus) const;
};

}  // namespace confsect
