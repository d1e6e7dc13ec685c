#pragma once

#include "confsect/graph.hpp"

#include <optional>
#include <string>

namespace confsect {

enum class Verdict { exists, not_exists, unknown };

const char* to_string(Verdict v);

struct Prediction {
  Verdict verdict = Verdict::unknown;
  std::string cite;    // short name of the criterion that applies
  std::string reason;  // human-readable justification or advice
};

// Vertex w maximizing the number of components of G minus w that meet w at
// least twice, with that count.
struct WedgeVertex {
  int vertex = -1;
  int components = 0;
};

WedgeVertex best_wedge_vertex(const Graph& g);
int wedge_components(const Graph& g, int w);

// k when g is a wedge of k balloons glued at their free vertices, else 0.
int balloon_wedge_size(const Graph& g);

Prediction predict(const Graph& g, int n);

}  // namespace confsect
