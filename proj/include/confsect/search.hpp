#pragma once

#include "confsect/pairs.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace confsect {

// 0-face id -> component of the realized complement.
using Labeling = std::map<std::string, Component>;

struct SearchOptions {
  bool pairs = false;
  long long budget = 10'000'000;  // revise steps
  std::uint64_t seed = 0;         // 0 keeps ascending value order
};

enum class ReasonKind { edge, pair_off, pair_on, incompatible, dead_end };

const char* to_string(ReasonKind k);

struct Prune {
  int node = 0;
  int value = 0;
  ReasonKind kind = ReasonKind::edge;
  int ref = 0;    // skeleton edge, pair group, or token
  int other = 0;  // second group for incompatible; unused otherwise
};

// Prune* then either a wipeout or a split whose branches all refute.
struct TraceNode {
  std::vector<Prune> prunes;
  int wipeout = -1;  // node whose domain emptied
  int split = -1;
  std::vector<std::pair<int, TraceNode>> branches;  // value, subtree
};

enum class SearchResult { sat, unsat, inconclusive };

const char* to_string(SearchResult r);

struct Certificate {
  SearchResult result = SearchResult::inconclusive;
  Labeling labeling;
  TraceNode trace;
  std::vector<std::string> flags;
  long long steps = 0;
  int groups = 0;
};

// Shared tables for search and replay.
struct SearchProblem {
  Graph graph;
  int n = 0;
  bool pairs = false;
  Skeleton skeleton;
  NodeComponents comps;
  std::vector<EdgeRelations> relations;
  std::vector<PairGroup> groups;
  std::vector<std::pair<int, int>> incompatible;
  std::vector<DeadEnd> dead;

  SearchProblem(const Graph& g, int n, bool pairs);
};

Certificate search_consistent(const Graph& g, int n, const SearchOptions& options = {});
Certificate search_consistent(const SearchProblem& p, const SearchOptions& options);

struct ReplayResult {
  bool ok = false;
  std::string error;
};

// Re-derives every step of an Unsat trace from scratch.
ReplayResult replay_trace(const Graph& g, int n, bool pairs, const TraceNode& trace);

// Independent re-check of every into-vertex constraint (and, with pairs, the
// pair rules read directly off the labeling).
bool validate_labeling(const Graph& g, int n, const Labeling& l, bool pairs = false);

// Pairs read off interval labels on non-bridge edges.
std::vector<DistinguishedPair> extract_distinguished_pairs(const Graph& g, int n, const Labeling& l);

}  // namespace confsect
