#pragma once

#include "confsect/search.hpp"

#include <json.hpp>

#include <string>

namespace confsect {

using Json = nlohmann::ordered_json;

// Graph schema: {"vertices":[...],"edges":[{"id","tail","head"}]}. With
// suppress2 the degree-2 vertices are merged away instead of rejected.
Graph load_graph(const Json& j, bool suppress2 = false);
Graph load_graph_file(const std::string& path, bool suppress2 = false);
Json graph_to_json(const Graph& g);

Json point_to_json(const Graph& g, const Point& p);
Point point_from_json(const Graph& g, const Json& j);
Json configuration_to_json(const Graph& g, const Configuration& x);
Configuration configuration_from_json(const Graph& g, const Json& j);

Json component_to_json(const Graph& g, const Component& c);
Component component_from_json(const Graph& g, const Json& j);

Json trace_to_json(const Skeleton& s, const TraceNode& t);
TraceNode trace_from_json(const Skeleton& s, const Json& j);

Json certificate_to_json(const Graph& g, const Skeleton& s, const Certificate& c);

}  // namespace confsect
