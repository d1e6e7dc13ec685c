#include "confsect/predict.hpp"

#include <map>
#include <numeric>

namespace confsect {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::exists: return "exists";
    case Verdict::not_exists: return "not_exists";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

int wedge_components(const Graph& g, int w) {
  // Union the other vertices through edges avoiding w; each loop at w is its
  // own component attached twice.
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : g.edges()) {
    if (e.tail != w && e.head != w) parent[find(e.tail)] = find(e.head);
  }
  std::map<int, int> attach;
  int count = 0;
  for (const auto& e : g.edges()) {
    if (e.is_loop() && e.tail == w) {
      ++count;
    } else if (e.tail == w) {
      ++attach[find(e.head)];
    } else if (e.head == w) {
      ++attach[find(e.tail)];
    }
  }
  for (const auto& [root, k] : attach) {
    if (k >= 2) ++count;
  }
  return count;
}

WedgeVertex best_wedge_vertex(const Graph& g) {
  WedgeVertex best;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int k = wedge_components(g, v);
    if (k > best.components) best = {v, k};
  }
  return best;
}

int balloon_wedge_size(const Graph& g) {
  // One hub whose every edge is a stem to a vertex carrying exactly one loop.
  for (int w = 0; w < g.vertex_count(); ++w) {
    int k = g.degree(w);
    if (k < 2 || g.vertex_count() != k + 1 || g.edge_count() != 2 * k) continue;
    bool ok = true;
    for (const auto& in : g.incidences(w)) {
      const auto& e = g.edge(in.edge);
      if (e.is_loop()) {
        ok = false;
        break;
      }
      int b = g.other_end(in.edge, w);
      int loops = 0;
      for (const auto& e2 : g.edges()) {
        if (e2.is_loop() && e2.tail == b) ++loops;
      }
      if (g.degree(b) != 3 || loops != 1) ok = false;
    }
    if (ok) return k;
  }
  return 0;
}

Prediction predict(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int chi = euler_characteristic(g);
  if (chi == 1) {
    if (n >= 2) return {Verdict::exists, "tree criterion", "tree with n >= 2: step from x1 toward x2"};
    return {Verdict::not_exists, "tree criterion", "every self-map of a tree has a fixed point"};
  }
  if (chi == 0) return {Verdict::exists, "flow criterion", "flow forward along the oriented circle"};
  if (n == 1) return {Verdict::exists, "antipode", "retract onto a circle and take the antipode"};
  if (n >= 2 - chi) return {Verdict::not_exists, "Theorem 1", "n >= 2 - chi"};
  if (int k = balloon_wedge_size(g); k > 0 && n >= 4 && n <= k) {
    return {Verdict::not_exists, "wedge of balloons", "wedge of " + std::to_string(k) + " balloons with 4 <= n <= k"};
  }
  auto w = best_wedge_vertex(g);
  if (w.components >= n) {
    return {Verdict::exists, "wedge criterion",
            "vertex " + g.vertex_name(w.vertex) + " has " + std::to_string(w.components) +
                " components attached at least twice"};
  }
  return {Verdict::unknown, "",
          "no criterion applies; run `search` on the core for a necessary-condition check"};
}

}  // namespace confsect
