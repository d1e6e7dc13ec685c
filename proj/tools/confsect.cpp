#include "confsect/builders.hpp"
#include "confsect/catalog.hpp"
#include "confsect/complex.hpp"
#include "confsect/json_io.hpp"
#include "confsect/predict.hpp"
#include "confsect/search.hpp"
#include "confsect/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace confsect;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph file, or the name of a built-in catalog graph.
Graph read_graph(const std::string& source, bool suppress2) {
  if (std::filesystem::exists(source)) return load_graph_file(source, suppress2);
  try {
    return catalog::by_name(source);
  } catch (const GraphError&) {
    throw UsageError("no such graph file or catalog name: " + source);
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text << "\n";
}

Json analyze(const Graph& g, int n) {
  Prediction p = predict(g, n);
  int chi = euler_characteristic(g);
  Json j{{"chi", chi}, {"predict", to_string(p.verdict)}, {"cite", p.cite}, {"reason", p.reason}};
  if (chi == 1) {
    j["core"] = nullptr;
    j["core_class"] = "tree";
  } else {
    CoreReduction core = core_reduction(g);
    j["core"] = graph_to_json(core.core);
    j["core_class"] = to_string(classify_core(core.core));
  }
  return j;
}

Json complex_json(const Graph& g, int n) {
  ComplexStats s = complex_stats(g, n);
  return {{"n", n},
          {"cells", s.cells},
          {"dim", s.dim},
          {"euler", s.euler},
          {"skeleton_components", s.skeleton_components}};
}

Json search_json(const Graph& g, int n, const SearchOptions& o) {
  SearchProblem problem(g, n, o.pairs);
  Certificate c = search_consistent(problem, o);
  Json j = certificate_to_json(g, problem.skeleton, c);
  Prediction p = predict(g, n);
  j["n"] = n;
  j["pairs"] = o.pairs;
  j["budget"] = o.budget;
  j["seed"] = o.seed;
  j["predict"] = to_string(p.verdict);
  j["divergence"] = c.result == SearchResult::sat && p.verdict == Verdict::not_exists;
  if (c.result == SearchResult::unsat) {
    ReplayResult r = replay_trace(g, n, o.pairs, c.trace);
    j["replay"] = r.ok ? "ok" : r.error;
  }
  j["version"] = kVersion;
  return j;
}

FunctionPtr build(const Graph& g, int n, const std::string& method, const std::string& vertex) {
  if (method == "antipode") {
    if (n != 1) throw UsageError("antipode needs -n 1");
    return build_antipode(g);
  }
  if (method == "tree") return build_tree_section(g, n);
  if (method == "chi0") return build_chi0_section(g, n);
  if (method == "wedge") {
    int w = vertex.empty() ? best_wedge_vertex(g).vertex : g.vertex_index(vertex);
    if (w < 0) throw BuildError("no wedge vertex");
    return build_wedge_section(g, w, n);
  }
  throw UsageError("unknown method: " + method);
}

// The builder a prediction points at, if any.
std::string method_for(const Graph& g, int n, const Prediction& p) {
  if (p.verdict != Verdict::exists) return "";
  int chi = euler_characteristic(g);
  if (n == 1 && chi <= 0) return "antipode";
  if (chi == 1) return "tree";
  if (chi == 0) return "chi0";
  return "wedge";
}

struct VerifyOptions {
  long long samples = 10000;
  int paths = 100;
  int steps = 100;
  int trials = 1000;
  std::uint64_t seed = 1;
  double lipschitz = 0;
};

VerificationReport run_verify(const IdentifyingFunction& f, const VerifyOptions& o) {
  double L = o.lipschitz > 0 ? o.lipschitz : default_lipschitz(f.method());
  VerificationReport r = verify_identifying(f, o.samples, o.seed);
  r.merge(verify_continuity(f, o.paths, o.steps, o.seed + 1, L));
  r.merge(verify_transition_consistency(f, o.trials, o.seed + 2));
  r.seed = o.seed;
  return r;
}

Json catalog_run(int n_max, const VerifyOptions& vo, bool& clean) {
  Json out = Json::array();
  for (const auto& [name, g] : catalog::standard()) {
    Json entry{{"graph", name}, {"chi", euler_characteristic(g)}};
    Json rows = Json::array();
    for (int n = 1; n <= n_max; ++n) {
      Prediction p = predict(g, n);
      Json row{{"n", n}, {"predict", to_string(p.verdict)}, {"cite", p.cite}};
      if (!g.is_circle_convention()) {
        row["cells"] = complex_stats(g, n).cells;
        SearchOptions so;
        so.pairs = true;
        SearchProblem problem(g, n, true);
        Certificate c = search_consistent(problem, so);
        row["search"] = to_string(c.result);
        row["flags"] = c.flags;
        if ((c.result == SearchResult::unsat && p.verdict == Verdict::exists) ||
            (c.result == SearchResult::sat && !validate_labeling(g, n, c.labeling, true))) {
          clean = false;
          row["error"] = "search disagrees with a known section";
        }
      }
      std::string method = method_for(g, n, p);
      if (!method.empty()) {
        auto f = build(g, n, method, "");
        VerificationReport r = run_verify(*f, vo);
        row["section"] = method;
        row["verify"] = {{"ok", r.ok()},
                         {"violations", r.violation_count},
                         {"max_ratio", r.max_ratio},
                         {"lipschitz", r.lipschitz}};
      }
      rows.push_back(row);
    }
    entry["runs"] = rows;
    out.push_back(entry);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sections of graph configuration spaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string source, out;
  int n = 1;
  bool suppress2 = false;
  auto common = [&](CLI::App* sub, bool needs_n = true) {
    sub->add_option("graph", source, "graph JSON file or catalog name")->required();
    if (needs_n) sub->add_option("-n", n, "number of tokens")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--suppress2", suppress2, "merge edges through degree-2 vertices");
    sub->add_option("-o,--output", out, "write output here instead of stdout");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Euler characteristic, core and prediction");
  common(analyze_cmd);

  bool dot = false;
  auto* complex_cmd = app.add_subcommand("complex", "cell counts of the cube complex");
  common(complex_cmd);
  complex_cmd->add_flag("--dot", dot, "emit the 1-skeleton in DOT");

  SearchOptions so;
  auto* search_cmd = app.add_subcommand("search", "search for a consistent system of components");
  common(search_cmd);
  search_cmd->add_flag("--pairs", so.pairs, "add distinguished-pair constraints");
  search_cmd->add_option("--budget", so.budget, "propagation step budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", so.seed, "value-order seed (0 keeps ascending order)");

  std::string method, vertex;
  auto* build_cmd = app.add_subcommand("build-section", "build an identifying function descriptor");
  common(build_cmd);
  build_cmd->add_option("--method", method, "antipode | tree | chi0 | wedge")
      ->required()
      ->check(CLI::IsMember({"antipode", "tree", "chi0", "wedge"}));
  build_cmd->add_option("--vertex", vertex, "wedge vertex (default: best)");

  VerifyOptions vo;
  std::string descriptor;
  auto* verify_cmd = app.add_subcommand("verify", "property-test an identifying function");
  verify_cmd->add_option("descriptor", descriptor, "descriptor JSON from build-section")->required();
  verify_cmd->add_option("--samples", vo.samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--paths", vo.paths)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--steps", vo.steps)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", vo.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vo.seed);
  verify_cmd->add_option("--lipschitz", vo.lipschitz, "continuity envelope (default per method)");
  verify_cmd->add_option("-o,--output", out);

  int n_max = 3;
  VerifyOptions catalog_vo;
  catalog_vo.samples = 1000;
  catalog_vo.paths = 20;
  catalog_vo.steps = 50;
  catalog_vo.trials = 200;
  auto* catalog_cmd = app.add_subcommand("catalog", "run the built-in graphs end to end");
  catalog_cmd->add_option("--n-max", n_max)->check(CLI::Range(1, 4));
  catalog_cmd->add_option("--seed", catalog_vo.seed);
  catalog_cmd->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      emit(analyze(read_graph(source, suppress2), n).dump(), out);
    } else if (*complex_cmd) {
      Graph g = read_graph(source, suppress2);
      emit(dot ? skeleton_dot(g, one_skeleton(g, n)) : complex_json(g, n).dump(), out);
    } else if (*search_cmd) {
      emit(search_json(read_graph(source, suppress2), n, so).dump(), out);
    } else if (*build_cmd) {
      emit(build(read_graph(source, suppress2), n, method, vertex)->descriptor().dump(), out);
    } else if (*verify_cmd) {
      std::ifstream in(descriptor);
      if (!in) throw UsageError("cannot read " + descriptor);
      FunctionPtr f = load_function(Json::parse(in));
      VerificationReport r = run_verify(*f, vo);
      Json j = report_to_json(f->graph(), r);
      j["method"] = f->method();
      j["n"] = f->n();
      j["version"] = kVersion;
      emit(j.dump(), out);
      return r.ok() ? 0 : 1;
    } else if (*catalog_cmd) {
      bool clean = true;
      Json j = catalog_run(n_max, catalog_vo, clean);
      emit(j.dump(), out);
      for (const auto& entry : j) {
        for (const auto& row : entry["runs"]) {
          if (row.contains("verify") && !row["verify"]["ok"].get<bool>()) clean = false;
        }
      }
      return clean ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
