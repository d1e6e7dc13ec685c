#include "confsect/json_io.hpp"

#include <fstream>

namespace confsect {

Graph load_graph(const Json& j, bool suppress2) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::map<std::string, int> ids;
  try {
    for (const auto& v : j.at("vertices")) {
      auto name = v.get<std::string>();
      if (!ids.emplace(name, static_cast<int>(names.size())).second) throw GraphError("duplicate vertex " + name);
      names.push_back(name);
    }
    for (const auto& e : j.at("edges")) {
      auto end = [&](const char* key) {
        auto name = e.at(key).get<std::string>();
        auto it = ids.find(name);
        if (it == ids.end()) throw GraphError("edge refers to unknown vertex " + name);
        return it->second;
      };
      edges.push_back({e.at("id").get<std::string>(), end("tail"), end("head")});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError(std::string("malformed graph description: ") + ex.what());
  }
  if (suppress2) return suppress_degree2(names, edges);
  return Graph(std::move(names), std::move(edges));
}

Graph load_graph_file(const std::string& path, bool suppress2) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError("parse error in " + path + ": " + ex.what());
  }
  return load_graph(j, suppress2);
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"id", e.name}, {"tail", g.vertex_name(e.tail)}, {"head", g.vertex_name(e.head)}});
  }
  return j;
}

Json point_to_json(const Graph& g, const Point& p) {
  if (p.is_vertex()) return {{"vertex", g.vertex_name(p.id)}};
  return {{"edge", g.edge(p.id).name}, {"t", to_string(p.t)}};
}

Point point_from_json(const Graph& g, const Json& j) {
  Point p = j.contains("vertex") ? Point::at_vertex(g.vertex_index(j.at("vertex").get<std::string>()))
                                 : Point::on_edge(g.edge_index(j.at("edge").get<std::string>()),
                                                  parse_rational(j.at("t").get<std::string>()));
  p = g.normalize(p);
  g.check_point(p);
  return p;
}

Json configuration_to_json(const Graph& g, const Configuration& x) {
  Json j = Json::array();
  for (const auto& p : x) j.push_back(point_to_json(g, p));
  return j;
}

Configuration configuration_from_json(const Graph& g, const Json& j) {
  Configuration x;
  for (const auto& p : j) x.push_back(point_from_json(g, p));
  return x;
}

Json component_to_json(const Graph& g, const Component& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces) {
    pieces.push_back({{"edge", g.edge(p.edge).name}, {"lo", to_string(p.lo)}, {"hi", to_string(p.hi)}});
  }
  Json vertices = Json::array();
  for (int v : c.vertices) vertices.push_back(g.vertex_name(v));
  return {{"pieces", pieces}, {"vertices", vertices}};
}

Component component_from_json(const Graph& g, const Json& j) {
  Component c;
  for (const auto& p : j.at("pieces")) {
    c.pieces.push_back({g.edge_index(p.at("edge").get<std::string>()), parse_rational(p.at("lo").get<std::string>()),
                        parse_rational(p.at("hi").get<std::string>())});
  }
  for (const auto& v : j.at("vertices")) c.vertices.push_back(g.vertex_index(v.get<std::string>()));
  c.canonicalize();
  return c;
}

namespace {

ReasonKind reason_from(const std::string& s) {
  for (auto k : {ReasonKind::edge, ReasonKind::pair_off, ReasonKind::pair_on, ReasonKind::incompatible,
                 ReasonKind::dead_end}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown prune reason " + s);
}

int node_of(const Skeleton& s, const Json& j) {
  auto it = s.index.find(j.get<std::string>());
  if (it == s.index.end()) throw std::invalid_argument("unknown face " + j.get<std::string>());
  return it->second;
}

}  // namespace

Json trace_to_json(const Skeleton& s, const TraceNode& t) {
  Json j;
  Json prunes = Json::array();
  for (const auto& p : t.prunes) {
    Json e = {{"face", s.node_ids[p.node]}, {"value", p.value}, {"reason", to_string(p.kind)}, {"ref", p.ref}};
    if (p.kind == ReasonKind::incompatible) e["other"] = p.other;
    prunes.push_back(e);
  }
  j["prunes"] = prunes;
  if (t.wipeout >= 0) {
    j["wipeout"] = s.node_ids[t.wipeout];
  } else if (t.split >= 0) {
    j["split"] = s.node_ids[t.split];
    j["branches"] = Json::array();
    for (const auto& [v, child] : t.branches) j["branches"].push_back({{"value", v}, {"node", trace_to_json(s, child)}});
  }
  return j;
}

TraceNode trace_from_json(const Skeleton& s, const Json& j) {
  TraceNode t;
  for (const auto& p : j.at("prunes")) {
    t.prunes.push_back({node_of(s, p.at("face")), p.at("value").get<int>(), reason_from(p.at("reason").get<std::string>()),
                        p.at("ref").get<int>(), p.value("other", 0)});
  }
  if (j.contains("wipeout")) t.wipeout = node_of(s, j.at("wipeout"));
  if (j.contains("split")) {
    t.split = node_of(s, j.at("split"));
    for (const auto& b : j.at("branches")) {
      t.branches.emplace_back(b.at("value").get<int>(), trace_from_json(s, b.at("node")));
    }
  }
  return t;
}

Json certificate_to_json(const Graph& g, const Skeleton& s, const Certificate& c) {
  Json j;
  j["result"] = to_string(c.result);
  if (c.result == SearchResult::sat) {
    Json l = Json::object();
    for (const auto& id : s.node_ids) l[id] = component_to_json(g, c.labeling.at(id));
    j["labeling"] = l;
  } else if (c.result == SearchResult::unsat) {
    j["trace"] = trace_to_json(s, c.trace);
  }
  j["flags"] = c.flags;
  j["steps"] = c.steps;
  return j;
}

}  // namespace confsect
