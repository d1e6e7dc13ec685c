#include "confsect/search.hpp"

#include "confsect/predict.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>

namespace confsect {

const char* to_string(ReasonKind k) {
  switch (k) {
    case ReasonKind::edge: return "edge";
    case ReasonKind::pair_off: return "pair-off";
    case ReasonKind::pair_on: return "pair-on";
    case ReasonKind::incompatible: return "incompatible";
    case ReasonKind::dead_end: return "dead-end";
  }
  return "?";
}

const char* to_string(SearchResult r) {
  switch (r) {
    case SearchResult::sat: return "sat";
    case SearchResult::unsat: return "unsat";
    case SearchResult::inconclusive: return "inconclusive";
  }
  return "?";
}

SearchProblem::SearchProblem(const Graph& g, int n_, bool pairs_)
    : graph(g), n(n_), pairs(pairs_), skeleton(one_skeleton(g, n_)) {
  comps = node_components(graph, skeleton);
  relations = skeleton_relations(graph, skeleton);
  for (const auto& c : comps) {
    if (c.size() > 64) throw std::runtime_error("more than 64 components in one configuration");
  }
  if (pairs) {
    groups = pair_groups(graph, skeleton, comps);
    incompatible = incompatible_groups(groups);
    dead = dead_ends(graph, skeleton, comps);
  }
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

struct BudgetExceeded {};

class Engine {
 public:
  Engine(const SearchProblem& p, const SearchOptions& o) : p_(p), opt_(o) {
    const auto& s = p.skeleton;
    fwd_.resize(s.edges.size());
    for (std::size_t k = 0; k < s.edges.size(); ++k) {
      for (const auto& row : p.relations[k].forward.rows) {
        Mask m = 0;
        for (int y : row) m |= bit(y);
        fwd_[k].push_back(m);
      }
    }
    keys_.resize(s.nodes.size());
    for (int gi = 0; gi < static_cast<int>(p.groups.size()); ++gi) {
      for (const auto& w : p.groups[gi].witnesses) keys_[w.node].push_back(gi);
    }
    clash_.resize(p.groups.size());
    for (auto [a, b] : p.incompatible) {
      clash_[a].push_back(b);
      clash_[b].push_back(a);
    }
  }

  long long steps() const { return steps_; }

  std::vector<Mask> full() const {
    std::vector<Mask> d;
    for (const auto& c : p_.comps) d.push_back(c.size() == 64 ? ~Mask{0} : bit(static_cast<int>(c.size())) - 1);
    return d;
  }

  // Returns the node whose domain emptied, or -1.
  int propagate(std::vector<Mask>& d, std::deque<int> queue, std::vector<Prune>& log) {
    std::vector<char> queued(d.size(), 0);
    for (int u : queue) queued[u] = 1;
    int wiped = -1;
    auto prune = [&](int node, int value, ReasonKind kind, int ref, int other) {
      d[node] &= ~bit(value);
      log.push_back({node, value, kind, ref, other});
      if (d[node] == 0 && wiped < 0) wiped = node;
      if (!queued[node]) {
        queued[node] = 1;
        queue.push_back(node);
      }
    };
    const auto& s = p_.skeleton;
    while (!queue.empty() && wiped < 0) {
      int u = queue.front();
      queue.pop_front();
      queued[u] = 0;
      for (int k : s.incident[u]) {
        if (++steps_ > opt_.budget) throw BudgetExceeded{};
        int a = s.edges[k].minus, b = s.edges[k].plus;
        for (Mask m = d[a]; m; m &= m - 1) {
          int v = std::countr_zero(m);
          if ((fwd_[k][v] & d[b]) == 0) prune(a, v, ReasonKind::edge, k, 0);
        }
        if (wiped >= 0) break;
        Mask support = 0;
        for (Mask m = d[a]; m; m &= m - 1) support |= fwd_[k][std::countr_zero(m)];
        for (Mask m = d[b] & ~support; m; m &= m - 1) prune(b, std::countr_zero(m), ReasonKind::edge, k, 0);
        if (wiped >= 0) break;
      }
      if (wiped >= 0) break;
      for (int gi : keys_[u]) {
        if (++steps_ > opt_.budget) throw BudgetExceeded{};
        const auto& ws = p_.groups[gi].witnesses;
        bool off = false, on = false;
        for (const auto& w : ws) {
          if (!(d[w.node] & bit(w.value))) off = true;
          if (d[w.node] == bit(w.value)) on = true;
        }
        if (off) {
          for (const auto& w : ws) {
            if (d[w.node] & bit(w.value)) prune(w.node, w.value, ReasonKind::pair_off, gi, 0);
          }
        }
        if (on && wiped < 0) {
          for (const auto& w : ws) {
            for (Mask m = d[w.node] & ~bit(w.value); m; m &= m - 1) {
              prune(w.node, std::countr_zero(m), ReasonKind::pair_on, gi, 0);
            }
          }
          for (int other : clash_[gi]) {
            for (const auto& w : p_.groups[other].witnesses) {
              if (d[w.node] & bit(w.value)) prune(w.node, w.value, ReasonKind::incompatible, other, gi);
            }
          }
        }
        if (wiped >= 0) break;
      }
    }
    return wiped;
  }

  // Depth-first search over the nodes of one group.
  bool solve(const std::vector<int>& nodes, std::vector<Mask>& d, TraceNode& t) {
    int var = -1;
    int best = 65;
    for (int u : nodes) {
      int c = std::popcount(d[u]);
      if (c > 1 && c < best) {
        best = c;
        var = u;
      }
    }
    if (var < 0) return true;
    std::vector<int> values;
    for (Mask m = d[var]; m; m &= m - 1) values.push_back(std::countr_zero(m));
    if (opt_.seed != 0) {
      std::mt19937_64 rng(opt_.seed * 0x9E3779B97F4A7C15ULL + static_cast<unsigned>(var) + ++draws_);
      std::shuffle(values.begin(), values.end(), rng);
    }
    t.split = var;
    for (int v : values) {
      std::vector<Mask> next = d;
      next[var] = bit(v);
      TraceNode child;
      int wiped = propagate(next, {var}, child.prunes);
      if (wiped >= 0) {
        child.wipeout = wiped;
      } else if (solve(nodes, next, child)) {
        d = std::move(next);
        return true;
      }
      t.branches.emplace_back(v, std::move(child));
    }
    return false;
  }

 private:
  const SearchProblem& p_;
  SearchOptions opt_;
  std::vector<std::vector<Mask>> fwd_;
  std::vector<std::vector<int>> keys_;
  std::vector<std::vector<int>> clash_;
  long long steps_ = 0;
  std::uint64_t draws_ = 0;
};

}  // namespace

Certificate search_consistent(const Graph& g, int n, const SearchOptions& options) {
  SearchProblem p(g, n, options.pairs);
  return search_consistent(p, options);
}

Certificate search_consistent(const SearchProblem& p, const SearchOptions& options) {
  if (options.pairs != p.pairs) throw std::invalid_argument("pair option does not match the problem");
  if (options.budget <= 0) throw std::invalid_argument("budget must be positive");
  Certificate cert;
  Engine engine(p, options);
  const auto& s = p.skeleton;
  std::vector<Mask> d = engine.full();
  TraceNode root;
  try {
    for (const auto& de : p.dead) {
      if (d[de.node] & bit(de.value)) {
        d[de.node] &= ~bit(de.value);
        root.prunes.push_back({de.node, de.value, ReasonKind::dead_end, de.token, 0});
      }
    }
    std::deque<int> all;
    for (int u = 0; u < static_cast<int>(s.nodes.size()); ++u) all.push_back(u);
    int wiped = -1;
    for (int u = 0; u < static_cast<int>(d.size()); ++u) {
      if (d[u] == 0) wiped = u;
    }
    if (wiped < 0) wiped = engine.propagate(d, all, root.prunes);
    if (wiped >= 0) {
      root.wipeout = wiped;
      cert.result = SearchResult::unsat;
      cert.trace = std::move(root);
      cert.steps = engine.steps();
      return cert;
    }
    std::vector<std::vector<int>> groups;
    if (p.pairs) {
      groups.emplace_back();
      for (int u = 0; u < static_cast<int>(s.nodes.size()); ++u) groups[0].push_back(u);
    } else {
      groups.resize(s.component_count);
      for (int u = 0; u < static_cast<int>(s.nodes.size()); ++u) groups[s.component[u]].push_back(u);
    }
    cert.groups = static_cast<int>(groups.size());
    std::vector<Mask> solution = d;
    for (const auto& nodes : groups) {
      std::vector<Mask> local = d;
      TraceNode t;
      t.prunes = root.prunes;
      if (!engine.solve(nodes, local, t)) {
        cert.result = SearchResult::unsat;
        cert.trace = std::move(t);
        cert.steps = engine.steps();
        return cert;
      }
      for (int u : nodes) solution[u] = local[u];
    }
    for (int u = 0; u < static_cast<int>(s.nodes.size()); ++u) {
      cert.labeling[s.node_ids[u]] = p.comps[u][std::countr_zero(solution[u])];
    }
    cert.result = SearchResult::sat;
    if (predict(p.graph, p.n).verdict != Verdict::exists) cert.flags.push_back("necessary-condition-only");
  } catch (const BudgetExceeded&) {
    cert.result = SearchResult::inconclusive;
    cert.labeling.clear();
    cert.trace = {};
  }
  cert.steps = engine.steps();
  return cert;
}

// ---- independent checkers ----

namespace {

struct Replayer {
  const SearchProblem& p;
  std::string error;

  bool has(const std::vector<Mask>& d, int node, int v) const { return (d[node] >> v) & 1; }

  bool witness_value(int gi, int node, int& value) const {
    for (const auto& w : p.groups.at(gi).witnesses) {
      if (w.node == node) {
        value = w.value;
        return true;
      }
    }
    return false;
  }

  bool group_on(const std::vector<Mask>& d, int gi) const {
    for (const auto& w : p.groups[gi].witnesses) {
      if (d[w.node] == bit(w.value)) return true;
    }
    return false;
  }

  bool group_off(const std::vector<Mask>& d, int gi) const {
    for (const auto& w : p.groups[gi].witnesses) {
      if (!has(d, w.node, w.value)) return true;
    }
    return false;
  }

  bool justified(const std::vector<Mask>& d, const Prune& pr) const {
    const auto& s = p.skeleton;
    switch (pr.kind) {
      case ReasonKind::edge: {
        if (pr.ref < 0 || pr.ref >= static_cast<int>(s.edges.size())) return false;
        const auto& se = s.edges[pr.ref];
        const auto& rows = p.relations[pr.ref].forward.rows;
        if (pr.node == se.minus) {
          for (int y : rows[pr.value]) {
            if (has(d, se.plus, y)) return false;
          }
          return true;
        }
        if (pr.node == se.plus) {
          for (int a = 0; a < static_cast<int>(rows.size()); ++a) {
            if (!has(d, se.minus, a)) continue;
            if (std::find(rows[a].begin(), rows[a].end(), pr.value) != rows[a].end()) return false;
          }
          return true;
        }
        return false;
      }
      case ReasonKind::pair_off: {
        int forced;
        if (!p.pairs || !witness_value(pr.ref, pr.node, forced)) return false;
        return forced == pr.value && group_off(d, pr.ref);
      }
      case ReasonKind::pair_on: {
        int forced;
        if (!p.pairs || !witness_value(pr.ref, pr.node, forced)) return false;
        return forced != pr.value && group_on(d, pr.ref);
      }
      case ReasonKind::incompatible: {
        int forced;
        if (!p.pairs || !witness_value(pr.ref, pr.node, forced)) return false;
        if (forced != pr.value || pr.other < 0 || pr.other >= static_cast<int>(p.groups.size())) return false;
        if (check_pairs({p.groups[pr.ref].key, p.groups[pr.other].key}).consistent) return false;
        return group_on(d, pr.other);
      }
      case ReasonKind::dead_end: {
        if (!p.pairs) return false;
        Configuration x = realize_vertex(p.graph, s.nodes[pr.node]);
        if (pr.ref < 1 || pr.ref > static_cast<int>(x.size())) return false;
        const Point& pos = x[pr.ref - 1];
        if (!pos.is_edge()) return false;
        const auto& ed = p.graph.edge(pos.id);
        for (const auto& piece : p.comps[pr.node][pr.value].pieces) {
          if (piece.edge != pos.id) continue;
          if (piece.lo == pos.t && piece.hi == 1 && p.graph.is_free(ed.head)) return true;
          if (piece.hi == pos.t && piece.lo == 0 && p.graph.is_free(ed.tail)) return true;
        }
        return false;
      }
    }
    return false;
  }

  bool walk(const TraceNode& t, std::vector<Mask> d, const std::string& where) {
    for (std::size_t i = 0; i < t.prunes.size(); ++i) {
      const auto& pr = t.prunes[i];
      if (pr.node < 0 || pr.node >= static_cast<int>(d.size()) || pr.value < 0 || pr.value >= 64 ||
          !has(d, pr.node, pr.value)) {
        error = where + ": prune " + std::to_string(i) + " removes a value not in the domain";
        return false;
      }
      if (!justified(d, pr)) {
        error = where + ": prune " + std::to_string(i) + " (" + to_string(pr.kind) + ") is not justified";
        return false;
      }
      d[pr.node] &= ~bit(pr.value);
    }
    if (t.wipeout >= 0) {
      if (t.wipeout >= static_cast<int>(d.size()) || d[t.wipeout] != 0) {
        error = where + ": claimed wipeout leaves a nonempty domain";
        return false;
      }
      return true;
    }
    if (t.split < 0 || t.split >= static_cast<int>(d.size())) {
      error = where + ": node neither wipes out nor splits";
      return false;
    }
    Mask covered = 0;
    for (const auto& [v, child] : t.branches) {
      if (v < 0 || v >= 64 || (covered & bit(v))) {
        error = where + ": bad branch value";
        return false;
      }
      covered |= bit(v);
    }
    if (covered != d[t.split]) {
      error = where + ": branches do not cover the split domain";
      return false;
    }
    for (const auto& [v, child] : t.branches) {
      auto next = d;
      next[t.split] = bit(v);
      if (!walk(child, next, where + "/" + std::to_string(t.split) + "=" + std::to_string(v))) return false;
    }
    return true;
  }
};

}  // namespace

ReplayResult replay_trace(const Graph& g, int n, bool pairs, const TraceNode& trace) {
  SearchProblem p(g, n, pairs);
  Replayer r{p, {}};
  std::vector<Mask> d;
  for (const auto& c : p.comps) d.push_back(c.size() == 64 ? ~Mask{0} : bit(static_cast<int>(c.size())) - 1);
  bool ok = r.walk(trace, d, "root");
  return {ok, r.error};
}

}  // namespace confsect
