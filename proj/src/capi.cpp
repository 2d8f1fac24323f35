#include "prodspec/prodspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "prodspec/errors.hpp"
#include "prodspec/graph.hpp"
#include "prodspec/integrality.hpp"
#include "prodspec/invariants.hpp"
#include "prodspec/product.hpp"
#include "prodspec/report.hpp"
#include "prodspec/spectra.hpp"
#include "prodspec/sweep.hpp"

struct ps_graph {
  prodspec::Graph graph;
};

namespace {

thread_local std::string last_error;

ps_status status_of(prodspec::ErrorKind kind) {
  switch (kind) {
    case prodspec::ErrorKind::Precondition:
      return PS_PRECONDITION;
    case prodspec::ErrorKind::Disconnected:
      return PS_DISCONNECTED;
    case prodspec::ErrorKind::Parse:
      return PS_PARSE_ERROR;
    case prodspec::ErrorKind::Internal:
      return PS_INTERNAL_ERROR;
  }
  return PS_INTERNAL_ERROR;
}

template <typename F>
ps_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const prodspec::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PS_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PS_INTERNAL_ERROR;
  }
}

ps_status invalid(const char* what) {
  last_error = what;
  return PS_INVALID_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ps_status emit_graph(prodspec::Graph g, ps_graph** out) {
  *out = new ps_graph{std::move(g)};
  return PS_OK;
}

prodspec::MatrixKind to_kind(ps_kind kind) {
  return kind == PS_KIND_Q ? prodspec::MatrixKind::SignlessLaplacian : prodspec::MatrixKind::Laplacian;
}

prodspec::OutputFormat to_format(ps_format format) {
  switch (format) {
    case PS_FORMAT_CSV:
      return prodspec::OutputFormat::Csv;
    case PS_FORMAT_PLAIN:
      return prodspec::OutputFormat::Plain;
    case PS_FORMAT_JSON:
    default:
      return prodspec::OutputFormat::Json;
  }
}

}  // namespace

extern "C" {

const char* ps_version(void) { return "1.0.0"; }

const char* ps_last_error(void) { return last_error.c_str(); }

void ps_string_free(char* s) { std::free(s); }

ps_status ps_graph_from_spec(const char* spec, ps_graph** out) {
  if (!spec || !out) return invalid("null argument");
  return guarded([&] { return emit_graph(prodspec::parse_graph_spec(spec), out); });
}

ps_status ps_graph_from_edge_list(const char* text, ps_graph** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { return emit_graph(prodspec::from_edge_list(text), out); });
}

ps_status ps_graph_from_graph6(const char* text, ps_graph** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { return emit_graph(prodspec::from_graph6(text), out); });
}

ps_status ps_graph_family(const char* name, const long* params, size_t param_count, ps_graph** out) {
  if (!name || !out || (param_count > 0 && !params)) return invalid("null argument");
  return guarded([&] {
    return emit_graph(prodspec::family(name, std::span<const long>(params, param_count)), out);
  });
}

void ps_graph_free(ps_graph* g) { delete g; }

size_t ps_graph_order(const ps_graph* g) { return g ? g->graph.order() : 0; }

size_t ps_graph_size(const ps_graph* g) { return g ? g->graph.size() : 0; }

long ps_graph_regularity(const ps_graph* g) {
  if (!g) return -1;
  auto profile = prodspec::degree_profile(g->graph);
  return profile.regularity ? static_cast<long>(*profile.regularity) : -1;
}

int ps_graph_is_connected(const ps_graph* g) { return g && prodspec::is_connected(g->graph) ? 1 : 0; }

ps_status ps_graph_encode(const ps_graph* g, ps_graph_encoding encoding, char** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    *out = duplicate(encoding == PS_ENCODING_GRAPH6 ? prodspec::to_graph6(g->graph) + "\n"
                                                    : prodspec::to_edge_list(g->graph));
    return PS_OK;
  });
}

ps_status ps_product(const ps_graph* first, const ps_graph* second, ps_graph** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] { return emit_graph(prodspec::product(first->graph, second->graph).graph, out); });
}

ps_status ps_corona(const ps_graph* first, const ps_graph* second, ps_graph** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] { return emit_graph(prodspec::corona(first->graph, second->graph), out); });
}

ps_status ps_product_labeling(const ps_graph* first, const ps_graph* second, char** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    prodspec::ProductLabeling labeling(first->graph.order(), second->graph.order());
    prodspec::Json j;
    j["schema"] = prodspec::kSchemaVersion;
    j["n1"] = labeling.n1();
    j["n2"] = labeling.n2();
    j["labels"] = prodspec::to_json(labeling);
    *out = duplicate(j.dump(2) + "\n");
    return PS_OK;
  });
}

ps_status ps_product_report(const ps_graph* first, const ps_graph* second, ps_format format, char** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    auto p = prodspec::product(first->graph, second->graph);
    if (p.graph.size() != prodspec::product_edge_count(first->graph, second->graph)) {
      prodspec::fail(prodspec::ErrorKind::Internal, "product edge count disagrees with n2^2(n1+e1)+n1 e2");
    }
    *out = duplicate(prodspec::render_product(p, to_format(format)));
    return PS_OK;
  });
}

ps_status ps_char_poly(const ps_graph* g, ps_kind kind, char** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    auto poly = prodspec::char_poly(prodspec::kind_matrix(g->graph, to_kind(kind)));
    *out = duplicate(prodspec::to_json(poly).dump());
    return PS_OK;
  });
}

ps_status ps_closed_char_poly(const ps_graph* first, const ps_graph* second, ps_kind kind, char** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    auto closed = prodspec::product_charpoly_closed(first->graph, second->graph, to_kind(kind));
    *out = duplicate(prodspec::to_json(closed.poly).dump());
    return PS_OK;
  });
}

ps_status ps_closed_form_report(const ps_graph* first, const ps_graph* second, ps_kind kind, ps_format format,
                                double tolerance, char** out) {
  if (!first || !second || !out) return invalid("null argument");
  if (!(tolerance > 0)) tolerance = 1e-12;
  return guarded([&] {
    auto report = prodspec::closed_form_report(first->graph, second->graph, to_kind(kind), tolerance);
    *out = duplicate(prodspec::render_closed_form(report, to_format(format)));
    return report.equal ? PS_OK : PS_VERIFICATION_FAILED;
  });
}

ps_status ps_kirchhoff(const ps_graph* g, char** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    *out = duplicate(prodspec::to_decimal(prodspec::kirchhoff_exact(g->graph)));
    return PS_OK;
  });
}

ps_status ps_spanning_trees(const ps_graph* g, char** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    auto count = prodspec::spanning_trees_matrix_tree(g->graph);
    if (!count.connected) prodspec::fail(prodspec::ErrorKind::Disconnected, "graph is disconnected; no spanning tree");
    *out = duplicate(prodspec::to_decimal(count.count));
    return PS_OK;
  });
}

ps_status ps_wiener(const ps_graph* g, char** out) {
  if (!g || !out) return invalid("null argument");
  return guarded([&] {
    *out = duplicate(prodspec::to_decimal(prodspec::wiener_bfs(g->graph)));
    return PS_OK;
  });
}

ps_status ps_invariants_report(const ps_graph* first, const ps_graph* second, ps_format format, char** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    auto reports = prodspec::invariant_reports(first->graph, second->graph);
    *out = duplicate(prodspec::render_invariants(reports, to_format(format)));
    for (const auto& r : reports)
      if (r.corrected_matches_oracle && !*r.corrected_matches_oracle) return PS_VERIFICATION_FAILED;
    return PS_OK;
  });
}

ps_status ps_is_integral(const ps_graph* g, ps_kind kind, int* integral) {
  if (!g || !integral) return invalid("null argument");
  return guarded([&] {
    *integral = prodspec::is_integral(g->graph, to_kind(kind)).integral ? 1 : 0;
    return PS_OK;
  });
}

ps_status ps_integrality_report(const ps_graph* first, const ps_graph* second, ps_kind kind, ps_format format,
                                char** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    auto verdict = prodspec::product_is_integral(first->graph, second->graph, to_kind(kind));
    *out = duplicate(prodspec::render_integrality(verdict, to_format(format)));
    return PS_OK;
  });
}

ps_status ps_verify(const ps_graph* const* graphs, const char* const* names, size_t count,
                    const ps_sweep_options* options, ps_format format, char** report, char** timings_csv) {
  if (!report || (count > 0 && !graphs)) return invalid("null argument");
  return guarded([&] {
    std::vector<prodspec::NamedGraph> set;
    if (count == 0) {
      set = prodspec::default_sweep_set();
    } else {
      for (size_t i = 0; i < count; ++i) {
        if (!graphs[i]) return invalid("null graph in sweep set");
        std::string name = names && names[i] ? names[i] : "G" + std::to_string(i);
        set.push_back({name, graphs[i]->graph});
      }
    }
    prodspec::SweepOptions opts;
    if (options) {
      if (options->max_order > 0) opts.max_order = options->max_order;
      if (options->jobs > 0) opts.jobs = options->jobs;
      if (options->tolerance > 0) opts.tolerance = options->tolerance;
      opts.include_verbatim = options->include_verbatim != 0;
    }
    auto result = prodspec::run_sweep(set, opts);
    *report = duplicate(prodspec::render_sweep(result, to_format(format)));
    if (timings_csv) *timings_csv = duplicate(prodspec::render_sweep_timings(result));
    return result.passed() ? PS_OK : PS_VERIFICATION_FAILED;
  });
}

}  // extern "C"
