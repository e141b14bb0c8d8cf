// Command-line front end. Every subcommand is one call into the C API and
// prints its JSON; --pretty renders a short human summary instead.
//
// Exit codes: 0 success, 1 verification mismatch (or a theory/atlas/internal
// failure), 2 input error, 3 budget exceeded.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "stablejones/stablejones.h"

using json = nlohmann::json;

namespace {

int exit_code(sj_status s) {
  switch (s) {
    case SJ_OK: return 0;
    case SJ_ERR_BUDGET: return 3;
    case SJ_ERR_INPUT:
    case SJ_ERR_NOT_PLANAR:
    case SJ_ERR_FIXTURE:
    case SJ_ERR_IO: return 2;
    default: return 1;
  }
}

const char* status_name(sj_status s) {
  switch (s) {
    case SJ_ERR_INPUT: return "InputError";
    case SJ_ERR_NOT_PLANAR: return "NotPlanar";
    case SJ_ERR_BUDGET: return "BudgetExceeded";
    case SJ_ERR_THEORY: return "TheoryViolation";
    case SJ_ERR_ATLAS: return "AtlasUnresolved";
    case SJ_ERR_FIXTURE: return "FixtureMissing";
    case SJ_ERR_IO: return "IoError";
    default: return "InternalError";
  }
}

int fail(sj_status s) {
  std::cerr << "error: " << status_name(s) << ": " << sj_last_error() << "\n";
  return exit_code(s);
}

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { sj_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Graph {
  sj_graph* g = nullptr;
  ~Graph() { sj_graph_free(g); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string series_text(const json& s) {
  std::ostringstream out;
  bool first = true;
  const auto& c = s.at("coeffs");
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::string v = c[k].is_string() ? c[k].get<std::string>() : std::to_string(c[k].get<long long>());
    if (v == "0") continue;
    const bool neg = v[0] == '-';
    const std::string mag = neg ? v.substr(1) : v;
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (k == 0 || mag != "1") out << mag;
    if (k > 0) out << "q" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  if (first) out << "0";
  out << " + O(q^" << c.size() << ")";
  return out.str();
}

void print(const std::string& cmd, const std::string& text, bool pretty) {
  if (!pretty) {
    std::cout << text << "\n";
    return;
  }
  const json j = json::parse(text);
  if (cmd == "phi") {
    std::cout << "Phi = " << series_text(j) << "\n";
  } else if (cmd == "cvec") {
    std::cout << "C_1.." << j.at("K") << " = " << j.at("C").dump() << "\n";
  } else if (cmd == "counts") {
    for (const auto& [k, v] : j.at("counts").items()) std::cout << k << "\t" << v << "\n";
  } else if (cmd == "verify") {
    std::cout << j.at("check").get<std::string>() << ": " << (j.at("passed").get<bool>() ? "passed" : "FAILED") << "\n";
    if (j.contains("report")) {
      const auto& r = j.at("report");
      std::cout << "rows " << r.at("rows").size() << ", failures " << r.at("failures") << ", fixture-suspect "
                << r.at("suspects") << "\n";
      for (const auto& m : r.at("mismatches"))
        std::cout << "  " << m.at("row").get<std::string>() << " " << m.at("field").get<std::string>()
                  << ": table " << m.at("expected").get<std::string>() << ", computed "
                  << m.at("actual").get<std::string>() << " [" << m.at("status").get<std::string>() << "]\n";
    }
    if (j.contains("failures") && j.at("failures").is_array())
      for (const auto& f : j.at("failures")) std::cout << "  " << f.get<std::string>() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable coefficients of alternating links from plane graphs"};
  app.require_subcommand(1);
  bool no_cache = false, pretty = false;
  std::string config_path, cache_dir, data_dir;
  std::uint64_t seed = 0;
  int threads = 0;
  std::uint64_t budget = 0;
  app.add_flag("--no-cache", no_cache, "Bypass the result cache");
  app.add_flag("--pretty", pretty, "Human-readable output");
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--cache-dir", cache_dir, "Cache directory (default $STABLE_JONES_CACHE or .sjcache)");
  app.add_option("--data-dir", data_dir, "Fixture directory");
  app.add_option("--threads", threads, "Worker threads (default $STABLE_JONES_THREADS or 1)");
  app.add_option("--node-budget", budget, "State-search node budget");
  app.add_option("--seed", seed, "Seed for randomized checks; published outputs do not depend on it");

  std::string graph_arg, check, patterns_file, data_file;
  int order = 5, K = 5, n = 4, edges = 3;
  bool trace = false, irreducible = false, plain = false;

  auto* phi = app.add_subcommand("phi", "Phi_G modulo q^(N+1)");
  phi->add_option("graph", graph_arg, "Graph file or built-in name")->required();
  phi->add_option("--order", order, "Truncation order N");
  auto* counts = app.add_subcommand("counts", "Induced pattern counts");
  counts->add_option("graph", graph_arg)->required();
  auto* cvec = app.add_subcommand("cvec", "Product exponents C_1..C_K");
  cvec->add_option("graph", graph_arg)->required();
  cvec->add_option("--k", K, "Number of exponents");
  auto* states = app.add_subcommand("states", "Admissible states up to degree N");
  states->add_option("graph", graph_arg)->required();
  states->add_option("--order", order);
  states->add_flag("--trace-states", trace, "List every state");
  auto* patterns = app.add_subcommand("patterns", "Pattern atlas with the matched table rows");
  patterns->add_option("--n", n, "Vertex count (4, 5 or 6)");
  auto* enumerate = app.add_subcommand("enumerate", "Connected planar graphs with E edges");
  enumerate->add_option("--edges", edges)->required();
  enumerate->add_flag("--irreducible", irreducible);
  auto* dtcode = app.add_subcommand("dtcode", "Dowker-Thistlethwaite code of the medial link");
  dtcode->add_option("graph", graph_arg)->required();
  dtcode->add_flag("--plain", plain, "Plain text for knot software");
  auto* verify = app.add_subcommand("verify", "Recompute and compare against theory and tables");
  verify->add_option("check", check)->required()->check(CLI::IsMember({"theorem1", "tables", "conjecture45", "question1"}));
  verify->add_option("--order", order, "Order for question1");
  auto* fit = app.add_subcommand("fit", "Exact linear fit of targets by pattern counts");
  fit->add_option("--patterns", patterns_file)->required();
  fit->add_option("--data", data_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const bool order_given = verify->count("--order") > 0;

  sj_options opts;
  sj_options_default(&opts);
  Owned cfg_cache;
  int max_order = 0;
  if (sj_status s = sj_config_load(config_path.empty() ? nullptr : config_path.c_str(), &opts.node_budget,
                                   &opts.threads, &max_order, &cfg_cache.p);
      s != SJ_OK)
    return fail(s);
  opts.cache_dir = cache_dir.empty() ? cfg_cache.p : cache_dir.c_str();
  if (!data_dir.empty()) opts.data_dir = data_dir.c_str();
  if (threads > 0) opts.threads = threads;
  if (budget > 0) opts.node_budget = budget;
  opts.use_cache = no_cache ? 0 : 1;

  if (order > max_order || K > max_order) {
    std::cerr << "error: InputError: order exceeds max_order " << max_order << "\n";
    return 2;
  }

  Graph graph;
  if (!graph_arg.empty())
    if (sj_status s = sj_graph_load(graph_arg.c_str(), &graph.g); s != SJ_OK) return fail(s);

  Owned out;
  sj_status s = SJ_OK;
  int mismatches = 0;
  std::string cmd;
  if (*phi) {
    cmd = "phi";
    s = sj_phi_json(graph.g, order, &opts, &out.p);
  } else if (*counts) {
    cmd = "counts";
    s = sj_counts_json(graph.g, &opts, &out.p);
  } else if (*cvec) {
    cmd = "cvec";
    s = sj_cvec_json(graph.g, K, &opts, &out.p);
  } else if (*states) {
    cmd = "states";
    s = sj_states_json(graph.g, order, trace ? 1 : 0, &opts, &out.p);
  } else if (*patterns) {
    cmd = "patterns";
    s = sj_patterns_json(n, &opts, &out.p);
  } else if (*enumerate) {
    cmd = "enumerate";
    s = sj_enumerate_json(edges, irreducible ? 1 : 0, &out.p);
  } else if (*dtcode) {
    cmd = "dtcode";
    s = plain ? sj_dtcode_plain(graph.g, &out.p) : sj_dtcode_json(graph.g, &out.p);
    if (s == SJ_OK && plain) {
      std::cout << out.str() << "\n";
      return 0;
    }
  } else if (*verify) {
    cmd = "verify";
    s = sj_verify_json(check.c_str(), order_given ? order : 0, &opts, &out.p, &mismatches);
  } else if (*fit) {
    cmd = "fit";
    std::string p, d;
    try {
      p = read_file(patterns_file);
      d = read_file(data_file);
    } catch (const std::exception& e) {
      std::cerr << "error: IoError: " << e.what() << "\n";
      return 2;
    }
    s = sj_fit_json(p.c_str(), d.c_str(), &opts, &out.p);
  }
  if (s != SJ_OK) return fail(s);
  if (sj_last_cache_hit() == 1) std::cerr << "cache hit: " << cmd << "\n";
  print(cmd, out.str(), pretty);
  return mismatches > 0 ? 1 : 0;
}
