#include "stablejones/stablejones.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <map>
#include <mutex>
#include <limits>
#include <new>
#include <sstream>

#include "stablejones/cache.hpp"
#include "stablejones/canonical.hpp"
#include "stablejones/config.hpp"
#include "stablejones/enumerate.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/graph_io.hpp"
#include "stablejones/patterns.hpp"
#include "stablejones/stable_coeffs.hpp"
#include "stablejones/states.hpp"
#include "stablejones/tait.hpp"
#include "stablejones/verify.hpp"

using json = nlohmann::json;
namespace sj = stablejones;

struct sj_graph {
  sj::GraphInput input;
};

struct sj_series {
  sj::TruncSeries series;
};

namespace {

thread_local std::string last_error;
thread_local int last_cache_hit = -1;

sj_status status_of(sj::ErrorKind kind) {
  switch (kind) {
    case sj::ErrorKind::Input: return SJ_ERR_INPUT;
    case sj::ErrorKind::NotPlanar: return SJ_ERR_NOT_PLANAR;
    case sj::ErrorKind::Budget: return SJ_ERR_BUDGET;
    case sj::ErrorKind::Theory: return SJ_ERR_THEORY;
    case sj::ErrorKind::Atlas: return SJ_ERR_ATLAS;
    case sj::ErrorKind::Fixture: return SJ_ERR_FIXTURE;
    case sj::ErrorKind::Io: return SJ_ERR_IO;
    case sj::ErrorKind::Internal: return SJ_ERR_INTERNAL;
  }
  return SJ_ERR_INTERNAL;
}

template <class F>
sj_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SJ_OK;
  } catch (const sj::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return SJ_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SJ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SJ_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw sj::InputError(std::string(what) + " must not be NULL");
}

struct Resolved {
  sj::EngineOptions engine;
  bool use_cache = false;
  std::string cache_dir;
  std::string data_dir;
};

Resolved resolve(const sj_options* opts) {
  sj_options o;
  sj_options_default(&o);
  if (opts) o = *opts;
  Resolved r;
  r.engine.node_budget = o.node_budget;
  r.engine.threads = o.threads < 1 ? 1 : o.threads;
  r.use_cache = o.use_cache != 0;
  sj::Config cfg;
  sj::apply_environment(cfg);
  r.cache_dir = o.cache_dir ? o.cache_dir : cfg.cache_dir;
  r.data_dir = o.data_dir ? o.data_dir : sj::default_data_dir();
  return r;
}

// Serves op(subject, order) from the cache when allowed, else computes and stores.
template <class F>
std::string cached(const Resolved& r, const std::string& op, const std::string& subject, int order, F&& compute) {
  if (!r.use_cache) {
    last_cache_hit = -1;
    return compute();
  }
  const sj::ResultCache cache(r.cache_dir);
  if (auto hit = cache.get(op, subject, order)) {
    last_cache_hit = 1;
    return *hit;
  }
  last_cache_hit = 0;
  std::string value = compute();
  cache.put(op, subject, order, value);
  return value;
}

json big(const sj::BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

const sj::PatternAtlas& atlas_for(const Resolved& r) {
  static std::mutex mutex;
  static std::map<std::string, sj::PatternAtlas> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(r.data_dir);
  if (it != memo.end()) return it->second;
  const std::string text = cached(r, "atlas", r.data_dir, 0, [&] {
    return sj::atlas_to_json(sj::identify_patterns(sj::load_table_fixture(r.data_dir + "/tables.csv"),
                                                   sj::load_atlas_keys(r.data_dir + "/atlas_keys.csv"), r.engine));
  });
  return memo.emplace(r.data_dir, sj::atlas_from_json(text)).first->second;
}

std::string subject_of(const sj_graph* g) { return sj::canonical_code(g->input.graph).hex(); }

sj::TruncSeries compute_phi(const sj_graph* g, int order, const Resolved& r) {
  if (order < 0) throw sj::InputError("order must be nonnegative");
  if (g->input.embedding) return sj::phi_series(*g->input.embedding, order, r.engine);
  return sj::phi_series(g->input.graph, order, r.engine);
}

sj::PlaneGraph embedding_of(const sj_graph* g) {
  if (g->input.embedding) return *g->input.embedding;
  if (!sj::is_connected(g->input.graph)) throw sj::InputError("graph must be connected");
  if (g->input.graph.edge_count() == 0) throw sj::EmptyGraph("graph has no edges");
  return sj::find_planar_embedding(g->input.graph);
}

json counts_object(const sj::CountVector& c) {
  json out = json::object();
  for (const auto& name : sj::CountVector::names()) out[name] = c.get(name);
  return out;
}

std::string rational_str(const sj::Rational& q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

std::string graph_from_json(const json& v) {
  if (!v.is_string()) throw sj::InputError("graph entries must be strings");
  return v.get<std::string>();
}

sj::SimpleGraph load_any(const std::string& text) {
  if (auto named = sj::named_graph(text)) return *named;
  if (text.find('\n') != std::string::npos || text.rfind("n ", 0) == 0 || text.rfind("{", 0) == 0)
    return sj::parse_graph_text(text).graph;
  try {
    return sj::load_graph(text).graph;
  } catch (const sj::IoError&) {
    return sj::parse_graph6(text);
  }
}

}  // namespace

extern "C" {

void sj_options_default(sj_options* opts) {
  if (!opts) return;
  opts->node_budget = 100'000'000;
  opts->threads = 1;
  opts->use_cache = 0;
  opts->cache_dir = nullptr;
  opts->data_dir = nullptr;
}

sj_status sj_config_load(const char* path, uint64_t* node_budget, int* threads, int* max_order,
                         char** cache_dir_out) {
  return guarded([&] {
    sj::Config cfg;
    if (path) cfg = sj::load_config(path, cfg);
    sj::apply_environment(cfg);
    if (node_budget) *node_budget = cfg.node_budget;
    if (threads) *threads = cfg.threads;
    if (max_order) *max_order = cfg.max_order;
    if (cache_dir_out) *cache_dir_out = dup(cfg.cache_dir);
  });
}

const char* sj_version(void) { return STABLEJONES_VERSION; }
const char* sj_last_error(void) { return last_error.c_str(); }
int sj_last_cache_hit(void) { return last_cache_hit; }
void sj_string_free(char* s) { std::free(s); }

sj_status sj_graph_parse(const char* text, sj_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sj_graph{sj::parse_graph_text(text)};
  });
}

sj_status sj_graph_load(const char* path_or_name, sj_graph** out) {
  return guarded([&] {
    require(path_or_name, "path");
    require(out, "out");
    *out = new sj_graph{sj::load_graph(path_or_name)};
  });
}

void sj_graph_free(sj_graph* g) { delete g; }
int sj_graph_vertex_count(const sj_graph* g) { return g ? g->input.graph.vertex_count() : -1; }
int sj_graph_edge_count(const sj_graph* g) { return g ? g->input.graph.edge_count() : -1; }

sj_status sj_graph_canonical_code(const sj_graph* g, char** hex_out) {
  return guarded([&] {
    require(g, "graph");
    require(hex_out, "out");
    *hex_out = dup(subject_of(g));
  });
}

sj_status sj_phi(const sj_graph* g, int order, const sj_options* opts, sj_series** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new sj_series{compute_phi(g, order, resolve(opts))};
  });
}

int sj_series_order(const sj_series* s) { return s ? s->series.order() : -1; }

sj_status sj_series_coeff(const sj_series* s, int k, char** decimal_out) {
  return guarded([&] {
    require(s, "series");
    require(decimal_out, "out");
    if (k < 0 || k > s->series.order()) throw sj::InputError("coefficient index out of range");
    *decimal_out = dup(s->series[k].str());
  });
}

sj_status sj_series_to_json(const sj_series* s, char** json_out) {
  return guarded([&] {
    require(s, "series");
    require(json_out, "out");
    *json_out = dup(sj::to_json(s->series));
  });
}

void sj_series_free(sj_series* s) { delete s; }

sj_status sj_phi_json(const sj_graph* g, int order, const sj_options* opts, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "out");
    const Resolved r = resolve(opts);
    // Phi does not depend on the embedding, so a pinned embedding shares the record.
    *json_out = dup(cached(r, "phi", subject_of(g), order, [&] { return sj::to_json(compute_phi(g, order, r)); }));
  });
}

sj_status sj_counts_json(const sj_graph* g, const sj_options* opts, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "out");
    const Resolved r = resolve(opts);
    const auto& atlas = atlas_for(r);
    *json_out = dup(cached(r, "counts", subject_of(g), 0, [&] {
      const sj::CountVector c = sj::pattern_counts(g->input.graph, atlas);
      json out{{"counts", counts_object(c)}};
      try {
        const auto phi = sj::phi_formula(c);
        out["phi_formula"] = {big(phi[0]), big(phi[1]), big(phi[2]), big(phi[3])};
      } catch (const sj::NonIntegerCoefficient&) {
        out["phi_formula"] = nullptr;
      }
      out["conjecture_C4"] = big(sj::conjecture_C4(c));
      out["conjecture_C5"] = big(sj::conjecture_C5(c));
      return out.dump();
    }));
  });
}

sj_status sj_cvec_json(const sj_graph* g, int K, const sj_options* opts, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "out");
    if (K < 1) throw sj::InputError("K must be at least 1");
    const Resolved r = resolve(opts);
    *json_out = dup(cached(r, "cvec", subject_of(g), K, [&] {
      const auto C = sj::exponent_vector(compute_phi(g, K, r), K);
      json arr = json::array();
      for (const auto& v : C) arr.push_back(big(v));
      return json{{"K", K}, {"C", arr}}.dump();
    }));
  });
}

sj_status sj_states_json(const sj_graph* g, int order, int trace, const sj_options* opts, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "out");
    if (order < 0) throw sj::InputError("order must be nonnegative");
    const Resolved r = resolve(opts);
    const sj::PlaneGraph pg = embedding_of(g);
    const auto states = sj::enumerate_states(pg, order, r.engine);
    json out{{"order", order},
             {"faces", pg.face_count()},
             {"outer_face", pg.outer_face()},
             {"root", pg.root_vertex()},
             {"count", states.size()}};
    std::map<long, std::size_t> by_degree;
    for (const auto& s : states) ++by_degree[s.weight.twice_degree() / 2];
    json hist = json::object();
    for (auto [d, n] : by_degree) hist[std::to_string(d)] = n;
    out["by_degree"] = hist;
    if (trace) {
      json list = json::array();
      for (const auto& s : states) {
        json a = json::object(), b = json::object();
        for (std::size_t p = 0; p < s.state.a.size(); ++p) a[std::to_string(p)] = s.state.a[p];
        for (std::size_t v = 0; v < s.state.b.size(); ++v) b[std::to_string(v)] = s.state.b[v];
        list.push_back({{"a", a}, {"b", b}, {"A", s.weight.A}, {"B", s.weight.B}});
      }
      out["states"] = list;
    }
    *json_out = dup(out.dump());
  });
}

sj_status sj_patterns_json(int n, const sj_options* opts, char** json_out) {
  return guarded([&] {
    require(json_out, "out");
    if (n < 4 || n > 6) throw sj::InputError("--n must be 4, 5 or 6");
    const Resolved r = resolve(opts);
    const auto& atlas = atlas_for(r);
    const auto rows = sj::load_table_fixture(r.data_dir + "/tables.csv");
    json out = json::array();
    const json all = json::parse(sj::atlas_to_json(atlas)).at("patterns");
    for (const auto& entry : all) {
      if (entry.at("n").get<int>() != n) continue;
      json e = entry;
      for (const auto& row : rows) {
        if (row.graph_id != entry.at("row").get<std::string>()) continue;
        e["table"] = {{"C", row.C}, {"link", row.link_name}, {"phi", row.phi}, {"consistent", sj::row_consistent(row)}};
      }
      out.push_back(e);
    }
    *json_out = dup(json{{"n", n}, {"patterns", out}}.dump());
  });
}

sj_status sj_enumerate_json(int edges, int irreducible, char** json_out) {
  return guarded([&] {
    require(json_out, "out");
    if (edges < 0 || edges > 12) throw sj::InputError("--edges must be between 0 and 12");
    const auto graphs =
        sj::enumerate_planar_by_edges(edges, irreducible ? sj::GraphFilter::Irreducible : sj::GraphFilter::All);
    json list = json::array();
    for (const auto& g : graphs)
      list.push_back({{"graph6", sj::to_graph6(g)}, {"n", g.vertex_count()}, {"code", sj::canonical_code(g).hex()}});
    *json_out = dup(json{{"edges", edges}, {"irreducible", irreducible != 0}, {"count", graphs.size()}, {"graphs", list}}.dump());
  });
}

sj_status sj_dtcode_json(const sj_graph* g, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "out");
    *json_out = dup(sj::dt_json(sj::dt_code(sj::medial_link(embedding_of(g)))));
  });
}

sj_status sj_dtcode_plain(const sj_graph* g, char** text_out) {
  return guarded([&] {
    require(g, "graph");
    require(text_out, "out");
    *text_out = dup(sj::dt_plain(sj::dt_code(sj::medial_link(embedding_of(g)))));
  });
}

sj_status sj_verify_json(const char* what, int order, const sj_options* opts, char** json_out, int* mismatches) {
  return guarded([&] {
    require(what, "what");
    require(json_out, "out");
    const Resolved r = resolve(opts);
    const std::string w = what;
    json out{{"check", w}};
    int failed = 0;
    if (w == "theorem1") {
      const auto rep = sj::verify_theorem1(8, r.engine);
      failed = static_cast<int>(rep.failures.size());
      out["graphs"] = rep.graphs;
      out["failures"] = rep.failures;
    } else if (w == "tables") {
      const auto rep = sj::verify_tables(sj::load_table_fixture(r.data_dir + "/tables.csv"), r.engine);
      failed = rep.failures();
      out["report"] = json::parse(sj::report_json(rep));
    } else if (w == "conjecture45") {
      const auto& atlas = atlas_for(r);
      const auto rep = sj::verify_conjecture45(atlas, r.engine);
      const auto fit = sj::fit_C4(atlas, r.engine);
      failed = static_cast<int>(rep.failures.size()) + (fit.fit.unique() ? 0 : 1);
      out["graphs"] = rep.graphs;
      out["failures"] = rep.failures;
      json coeffs = json::object();
      for (std::size_t i = 0; i < fit.patterns.size(); ++i) coeffs[fit.patterns[i]] = rational_str(fit.fit.coefficients[i]);
      out["fit_C4"] = {{"coefficients", coeffs}, {"dimension", fit.fit.dimension}, {"data_points", fit.data_points}};
    } else if (w == "question1") {
      const int K = order > 0 ? order : 15;
      const auto q = sj::check_question1(K, r.engine);
      failed = q.holds ? 0 : 1;
      out["order"] = K;
      out["holds"] = q.holds;
      out["lhs"] = json::parse(sj::to_json(q.lhs));
      out["rhs"] = json::parse(sj::to_json(q.rhs));
    } else {
      throw sj::InputError("unknown check '" + w + "' (theorem1, tables, conjecture45, question1)");
    }
    out["passed"] = failed == 0;
    if (mismatches) *mismatches = failed;
    *json_out = dup(out.dump());
  });
}

sj_status sj_fit_json(const char* patterns_json, const char* data_json, const sj_options* opts, char** json_out) {
  return guarded([&] {
    require(patterns_json, "patterns");
    require(data_json, "data");
    require(json_out, "out");
    const Resolved r = resolve(opts);
    const json pj = json::parse(patterns_json), dj = json::parse(data_json);
    std::vector<std::string> names;
    std::vector<sj::QuantumGraph> patterns;
    for (const auto& p : pj.at("patterns")) {
      if (p.is_string()) {
        const std::string name = p.get<std::string>();
        names.push_back(name);
        if (name == "c1") patterns.push_back(sj::point());
        else if (name == "c2") patterns.push_back(sj::edge());
        else if (name == "c3") patterns.push_back(sj::triangle());
        else patterns.emplace_back(atlas_for(r).at(name));
      } else {
        names.push_back(p.at("name").get<std::string>());
        patterns.emplace_back(load_any(graph_from_json(p.at("graph"))));
      }
    }
    std::vector<std::pair<sj::SimpleGraph, sj::BigInt>> data;
    for (const auto& d : dj.at("data")) {
      sj::SimpleGraph g = load_any(graph_from_json(d.at("graph")));
      const json& t = d.at("target");
      sj::BigInt target;
      if (t.is_number_integer()) {
        target = t.get<long long>();
      } else if (t.is_string() && t.get<std::string>().size() >= 2 && t.get<std::string>()[0] == 'C') {
        const int k = std::stoi(t.get<std::string>().substr(1));
        if (k < 1 || k > 40) throw sj::InputError("target index out of range");
        target = sj::exponent_vector(sj::phi_series(g, k, r.engine), k)[k - 1];
      } else {
        throw sj::InputError("target must be an integer or \"C<k>\"");
      }
      data.emplace_back(std::move(g), target);
    }
    const auto fit = sj::fit_linear_form(patterns, data);
    json coeffs = json::object();
    for (std::size_t i = 0; i < names.size(); ++i) coeffs[names[i]] = rational_str(fit.coefficients[i]);
    *json_out = dup(json{{"coefficients", coeffs},
                         {"dimension", fit.dimension},
                         {"unique", fit.unique()},
                         {"data_points", data.size()}}
                        .dump());
  });
}

}  // extern "C"
