// prodspec command-line front end. Talks to the library only through the C API.
#include <prodspec/prodspec.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

struct GraphDeleter {
  void operator()(ps_graph* g) const { ps_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ps_graph, GraphDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { ps_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

// Status carried out of a failed C call.
struct Failure {
  ps_status status;
  std::string message;
};

void check(ps_status st) {
  if (st != PS_OK) throw Failure{st, ps_last_error()};
}

GraphPtr load(const std::string& spec) {
  ps_graph* g = nullptr;
  ps_status st = ps_graph_from_spec(spec.c_str(), &g);
  if (st != PS_OK) throw Failure{st, spec + ": " + ps_last_error()};
  return GraphPtr(g);
}

ps_format parse_format(const std::string& s) {
  if (s == "csv") return PS_FORMAT_CSV;
  if (s == "plain") return PS_FORMAT_PLAIN;
  return PS_FORMAT_JSON;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{PS_INVALID_ARGUMENT, "cannot write " + path};
  out << text;
}

// A report plus a status that may be PS_VERIFICATION_FAILED; print either way.
int emit(ps_status st, const CString& text) {
  if (st != PS_OK && st != PS_VERIFICATION_FAILED) throw Failure{st, ps_last_error()};
  std::cout << text.str();
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and invariants of the a/b-copy graph product"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ps_version()));

  std::string out_format = "json";
  std::string kind = "L";
  double tol = 0.0;
  std::vector<std::string> specs;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "L (Laplacian) or Q (signless Laplacian)")->check(CLI::IsMember({"L", "Q"}));
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("graphs", specs, "Two graph specs: K4, C5, P4, S4, K3,3, Q3, petersen or @file")
        ->required()
        ->expected(2);
  };

  auto* product = app.add_subcommand("product", "Build the product graph and check its edge count");
  std::string encoding = "graph6";
  std::string write_path;
  add_pair(product);
  add_out(product);
  product->add_option("--format", encoding, "Encoding used with --write")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  product->add_option("--write", write_path, "Write the graph here and labels to PATH.labels.json");

  auto* charpoly = app.add_subcommand("charpoly", "Closed-form versus direct characteristic polynomial");
  auto* spectrum = app.add_subcommand("spectrum", "Same report as charpoly");
  for (auto* sub : {charpoly, spectrum}) {
    add_pair(sub);
    add_kind(sub);
    add_out(sub);
    sub->add_option("--tol", tol, "Jacobi tolerance for the numeric fallback");
  }

  auto* invariants = app.add_subcommand("invariants", "Kirchhoff index, spanning trees and Wiener index");
  add_pair(invariants);
  add_out(invariants);

  auto* integral = app.add_subcommand("integral", "Integrality of one graph or of a product");
  integral->add_option("graphs", specs, "One or two graph specs")->required()->expected(1, 2);
  add_kind(integral);
  add_out(integral);

  auto* verify = app.add_subcommand("verify", "Run the verification sweep");
  ps_sweep_options sweep{60, 1, 1e-9, 0};
  bool verbatim = false;
  std::string timings_path;
  verify->add_option("graphs", specs, "Sweep set (defaults to the built-in set)");
  verify->add_option("--max-order", sweep.max_order, "Bound on 2*n1*n2");
  verify->add_option("--jobs", sweep.jobs, "Worker threads");
  verify->add_option("--tol", sweep.tolerance, "Relative eigenvalue tolerance");
  verify->add_flag("--verbatim", verbatim, "Also list mismatches of the printed formulas");
  verify->add_option("--timings", timings_path, "Write the per-pair timing CSV here (default: stderr)");
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : PS_INVALID_ARGUMENT;
  }

  const ps_format format = parse_format(out_format);
  const ps_kind k = kind == "Q" ? PS_KIND_Q : PS_KIND_L;

  try {
    if (product->parsed()) {
      auto g1 = load(specs[0]);
      auto g2 = load(specs[1]);
      CString report;
      check(ps_product_report(g1.get(), g2.get(), format, &report.p));
      if (!write_path.empty()) {
        ps_graph* raw = nullptr;
        check(ps_product(g1.get(), g2.get(), &raw));
        GraphPtr p(raw);
        CString text, labels;
        check(ps_graph_encode(p.get(), encoding == "edgelist" ? PS_ENCODING_EDGE_LIST : PS_ENCODING_GRAPH6,
                              &text.p));
        check(ps_product_labeling(g1.get(), g2.get(), &labels.p));
        write_file(write_path, text.str());
        write_file(write_path + ".labels.json", labels.str());
      }
      std::cout << report.str();
      return 0;
    }
    if (charpoly->parsed() || spectrum->parsed()) {
      auto g1 = load(specs[0]);
      auto g2 = load(specs[1]);
      CString report;
      return emit(ps_closed_form_report(g1.get(), g2.get(), k, format, tol, &report.p), report);
    }
    if (invariants->parsed()) {
      auto g1 = load(specs[0]);
      auto g2 = load(specs[1]);
      CString report;
      return emit(ps_invariants_report(g1.get(), g2.get(), format, &report.p), report);
    }
    if (integral->parsed()) {
      if (specs.size() == 1) {
        auto g = load(specs[0]);
        int yes = 0;
        check(ps_is_integral(g.get(), k, &yes));
        if (format == PS_FORMAT_JSON)
          std::cout << "{\"schema\":1,\"command\":\"integral\",\"kind\":\"" << kind
                    << "\",\"integral\":" << (yes ? "true" : "false") << "}\n";
        else if (format == PS_FORMAT_CSV)
          std::cout << "kind,integral\n" << kind << "," << (yes ? "true" : "false") << "\n";
        else
          std::cout << specs[0] << " is " << (yes ? "" : "not ") << kind << "-integral\n";
        return 0;
      }
      auto g1 = load(specs[0]);
      auto g2 = load(specs[1]);
      CString report;
      return emit(ps_integrality_report(g1.get(), g2.get(), k, format, &report.p), report);
    }
    if (verify->parsed()) {
      std::vector<GraphPtr> owned;
      std::vector<const ps_graph*> graphs;
      std::vector<const char*> names;
      for (const auto& s : specs) {
        owned.push_back(load(s));
        graphs.push_back(owned.back().get());
        names.push_back(s.c_str());
      }
      sweep.include_verbatim = verbatim ? 1 : 0;
      CString report, timings;
      ps_status st = ps_verify(graphs.data(), names.data(), graphs.size(), &sweep, format, &report.p, &timings.p);
      if (st != PS_OK && st != PS_VERIFICATION_FAILED) throw Failure{st, ps_last_error()};
      std::cout << report.str();
      if (timings_path.empty())
        std::cerr << timings.str();
      else
        write_file(timings_path, timings.str());
      return st;
    }
  } catch (const Failure& f) {
    std::cerr << "prodspec: " << f.message << "\n";
    return f.status;
  }
  return PS_INTERNAL_ERROR;
}
