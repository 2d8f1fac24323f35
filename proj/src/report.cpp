#include "prodspec/report.hpp"

#include <iomanip>
#include <sstream>

#include "prodspec/errors.hpp"

namespace prodspec {
namespace {

Json opt_rational(const std::optional<Rational>& v) { return v ? Json(to_decimal(*v)) : Json(nullptr); }

Json opt_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string opt_text(const std::optional<Rational>& v, std::string_view absent = "n/a") {
  return v ? to_decimal(*v) : std::string(absent);
}

std::string opt_flag(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string block_name(Block b) { return b == Block::A ? "a" : "b"; }

}  // namespace

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_decimal(c));
  return arr;
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "polynomial JSON must be an array");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (!v.is_string()) fail(ErrorKind::Parse, "polynomial coefficients must be decimal strings");
    Rational r;
    if (r.set_str(v.get<std::string>(), 10) != 0) fail(ErrorKind::Parse, "bad coefficient '" + v.get<std::string>() + "'");
    c.push_back(r);
  }
  return Polynomial(std::move(c));
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "matrix JSON must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorKind::Parse, "ragged matrix JSON");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_string() || m(i, k).set_str(j[i][k].get<std::string>(), 10) != 0) {
        fail(ErrorKind::Parse, "matrix entries must be decimal strings");
      }
    }
  }
  return m;
}

Json to_json(const Eigenvalue& e) {
  Json j;
  if (e.is_rational()) {
    j["type"] = "rational";
    j["value"] = to_decimal(e.as_rational());
  } else if (e.is_surd()) {
    const auto& q = e.as_surd();
    j["type"] = "surd";
    j["a"] = to_decimal(q.a);
    j["sign"] = q.sign;
    j["b"] = to_decimal(q.b);
    j["d"] = to_decimal(q.d);
    j["c"] = to_decimal(q.c);
    j["text"] = e.to_string();
  } else {
    j["type"] = "numeric";
    j["value"] = e.as_numeric().value;
    j["tolerance"] = e.as_numeric().tolerance;
  }
  return j;
}

Json to_json(const Spectrum& s) {
  Json j;
  j["exact"] = s.exact();
  j["total"] = s.total();
  j["trace"] = to_decimal(s.trace());
  Json entries = Json::array();
  for (const auto& e : s.entries()) entries.push_back({{"eigenvalue", to_json(e.value)}, {"multiplicity", e.multiplicity}});
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const ClosedFormReport& r) {
  Json j;
  j["kind"] = std::string(kind_name(r.kind));
  j["closed"] = to_json(r.closed_poly);
  j["direct"] = to_json(r.direct_poly);
  j["equal"] = r.equal;
  j["factors"] = {{"linear_power", to_json(r.factors.linear_power)},
                  {"shifted", to_json(r.factors.shifted)},
                  {"composed", to_json(r.factors.composed)}};
  j["numeric_fallback"] = !r.spectrum.exact();
  j["spectrum"] = to_json(r.spectrum);
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["name"] = r.name;
  j["printed_value"] = opt_rational(r.printed_value);
  j["printed_route"] = r.printed_route;
  j["printed_non_finite"] = r.printed_non_finite;
  j["corrected_value"] = opt_rational(r.corrected_value);
  j["corrected_route"] = r.corrected_route;
  j["oracle_value"] = to_decimal(r.oracle_value);
  j["oracle_route"] = r.oracle_route;
  j["corrected_matches_oracle"] = opt_bool(r.corrected_matches_oracle);
  j["printed_matches_oracle"] = opt_bool(r.printed_matches_oracle);
  if (r.name == "wiener") {
    j["linear_variant_value"] = opt_rational(r.linear_variant_value);
    j["linear_variant_matches_oracle"] = opt_bool(r.linear_variant_matches_oracle);
    j["applicable"] = opt_bool(r.applicable);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const IntegralityVerdict& v) {
  Json roots = Json::array();
  for (const auto& r : v.roots) roots.push_back(to_decimal(r));
  return {{"kind", std::string(kind_name(v.kind))},
          {"integral", v.integral},
          {"roots", std::move(roots)},
          {"remainder", to_json(v.remainder)}};
}

Json to_json(const ProductIntegrality& v) {
  const auto& s = v.structural;
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"eigenvalue", to_decimal(c.eigenvalue)},
                      {"discriminant", to_decimal(c.discriminant)},
                      {"integer_roots", c.integer_roots}});
  }
  Json structural = {{"integral", s.integral},
                     {"second_factor_integral", s.second_factor_integral},
                     {"first_factor_integral", s.first_factor_integral},
                     {"failure", s.failure.empty() ? Json(nullptr) : Json(s.failure)},
                     {"witness_discriminant", s.witness_discriminant ? Json(to_decimal(*s.witness_discriminant)) : Json(nullptr)},
                     {"witness_factor", s.witness_factor ? to_json(*s.witness_factor) : Json(nullptr)},
                     {"checks", std::move(checks)}};
  return {{"direct", to_json(v.direct)},
          {"structural", std::move(structural)},
          {"routes_agree", v.direct.integral == s.integral}};
}

Json to_json(const ProductLabeling& labeling) {
  Json arr = Json::array();
  for (std::size_t idx = 0; idx < labeling.size(); ++idx) {
    auto l = labeling.label(idx);
    arr.push_back({{"index", idx}, {"block", block_name(l.block)}, {"i", l.i}, {"k", l.k}});
  }
  return arr;
}

std::string render_product(const ProductGraph& p, OutputFormat format) {
  const std::size_t expected = product_edge_count(p.first, p.second);
  const bool holds = expected == p.graph.size();
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["command"] = "product";
      j["n1"] = p.first.order();
      j["e1"] = p.first.size();
      j["n2"] = p.second.order();
      j["e2"] = p.second.size();
      j["vertices"] = p.graph.order();
      j["edges"] = p.graph.size();
      j["expected_edges"] = expected;
      j["formula_holds"] = holds;
      j["graph6"] = to_graph6(p.graph);
      j["labeling"] = to_json(p.labeling);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "n1,e1,n2,e2,vertices,edges,expected_edges,formula_holds,graph6\n"
         << p.first.order() << ',' << p.first.size() << ',' << p.second.order() << ',' << p.second.size() << ','
         << p.graph.order() << ',' << p.graph.size() << ',' << expected << ',' << (holds ? "true" : "false") << ','
         << csv_field(to_graph6(p.graph)) << '\n';
      return os.str();
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      os << "vertices: " << p.graph.order() << '\n'
         << "edges: " << p.graph.size() << '\n'
         << "n2^2 (n1 + e1) + n1 e2 = " << p.second.order() << "^2 (" << p.first.order() << " + "
         << p.first.size() << ") + " << p.first.order() << "*" << p.second.size() << " = " << expected
         << (holds ? "  [matches]" : "  [MISMATCH]") << '\n'
         << "graph6: " << to_graph6(p.graph) << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_closed_form(const ClosedFormReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["command"] = "charpoly";
      Json body = to_json(r);
      for (auto& [k, v] : body.items()) j[k] = v;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << std::setprecision(17) << "eigenvalue,type,multiplicity,approx\n";
      for (const auto& e : r.spectrum.entries()) {
        const char* type = e.value.is_rational() ? "rational" : e.value.is_surd() ? "surd" : "numeric";
        os << csv_field(e.value.to_string()) << ',' << type << ',' << e.multiplicity << ',' << e.value.approx() << '\n';
      }
      return os.str();
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      os << "kind: " << kind_name(r.kind) << '\n'
         << "closed: " << r.closed_poly.to_string() << '\n'
         << "direct: " << r.direct_poly.to_string() << '\n'
         << "equal: " << (r.equal ? "true" : "false") << '\n'
         << "spectrum (" << (r.spectrum.exact() ? "exact" : "numeric fallback") << ", total "
         << r.spectrum.total() << ", trace " << to_decimal(r.spectrum.trace()) << "):\n";
      for (const auto& e : r.spectrum.entries()) {
        os << "  " << e.value.to_string();
        if (e.multiplicity > 1) os << "  x" << e.multiplicity;
        os << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string render_invariants(const std::vector<InvariantReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["command"] = "invariants";
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      j["reports"] = std::move(arr);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "name,printed_value,corrected_value,oracle_value,corrected_matches_oracle,printed_matches_oracle,"
            "linear_variant_value,linear_variant_matches_oracle,applicable\n";
      for (const auto& r : reports) {
        os << r.name << ',' << opt_text(r.printed_value, r.printed_non_finite ? "non-finite" : "n/a") << ',' << opt_text(r.corrected_value, "")
           << ',' << to_decimal(r.oracle_value) << ',' << opt_flag(r.corrected_matches_oracle) << ','
           << opt_flag(r.printed_matches_oracle) << ',' << opt_text(r.linear_variant_value, "") << ','
           << opt_flag(r.linear_variant_matches_oracle) << ',' << opt_flag(r.applicable) << '\n';
      }
      return os.str();
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      for (const auto& r : reports) {
        os << r.name << '\n'
           << "  oracle:    " << to_decimal(r.oracle_value) << "  (" << r.oracle_route << ")\n"
           << "  corrected: " << opt_text(r.corrected_value);
        if (r.corrected_matches_oracle) os << "  matches oracle: " << yes_no(*r.corrected_matches_oracle);
        os << '\n' << "  printed:   " << opt_text(r.printed_value, r.printed_non_finite ? "non-finite" : "n/a");
        if (r.printed_matches_oracle) os << "  matches oracle: " << yes_no(*r.printed_matches_oracle);
        os << "  (" << r.printed_route << ")\n";
        if (r.linear_variant_value) {
          os << "  4 n2 variant: " << to_decimal(*r.linear_variant_value)
             << "  matches oracle: " << yes_no(r.linear_variant_matches_oracle.value_or(false)) << '\n';
        }
        if (r.applicable) os << "  diam(G2) <= 2: " << yes_no(*r.applicable) << '\n';
        if (!r.note.empty()) os << "  note: " << r.note << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string render_integrality(const ProductIntegrality& v, OutputFormat format) {
  const auto& s = v.structural;
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["command"] = "integral";
      Json body = to_json(v);
      for (auto& [k, val] : body.items()) j[k] = val;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "kind,direct_integral,structural_integral,failure,witness_discriminant\n"
         << kind_name(v.direct.kind) << ',' << (v.direct.integral ? "true" : "false") << ','
         << (s.integral ? "true" : "false") << ',' << s.failure << ','
         << (s.witness_discriminant ? to_decimal(*s.witness_discriminant) : "") << '\n';
      return os.str();
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      os << "kind: " << kind_name(v.direct.kind) << '\n'
         << "integral (direct): " << yes_no(v.direct.integral) << '\n'
         << "integral (structural): " << yes_no(s.integral) << '\n';
      if (!s.failure.empty()) os << "failure: " << s.failure << '\n';
      if (s.witness_factor) os << "witness factor: " << s.witness_factor->to_string() << '\n';
      if (s.witness_discriminant) os << "witness discriminant: " << to_decimal(*s.witness_discriminant) << '\n';
      if (v.direct.integral) {
        os << "roots:";
        for (const auto& r : v.direct.roots) os << ' ' << to_decimal(r);
        os << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string render_sweep(const SweepResult& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["schema"] = kSchemaVersion;
      j["command"] = "verify";
      j["passed"] = r.passed();
      j["pairs_checked"] = r.pairs.size();
      j["failures"] = r.failures();
      Json pairs = Json::array();
      for (const auto& p : r.pairs) {
        Json checks = Json::array();
        for (const auto& c : p.checks) {
          Json cj{{"name", c.name}, {"passed", c.passed}};
          if (!c.detail.empty()) cj["detail"] = c.detail;
          checks.push_back(std::move(cj));
        }
        pairs.push_back({{"first", p.first},
                         {"second", p.second},
                         {"order", p.order},
                         {"passed", p.passed()},
                         {"checks", std::move(checks)},
                         {"annotations", p.annotations}});
      }
      j["pairs"] = std::move(pairs);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "first,second,order,passed,checks,failed_checks,annotations\n";
      for (const auto& p : r.pairs) {
        std::string failed;
        for (const auto& c : p.checks)
          if (!c.passed) failed += (failed.empty() ? "" : ";") + c.name;
        std::string notes;
        for (const auto& a : p.annotations) notes += (notes.empty() ? "" : ";") + a;
        os << csv_field(p.first) << ',' << csv_field(p.second) << ',' << p.order << ','
           << (p.passed() ? "true" : "false") << ',' << p.checks.size() << ',' << csv_field(failed) << ','
           << csv_field(notes) << '\n';
      }
      return os.str();
    }
    case OutputFormat::Plain: {
      std::ostringstream os;
      for (const auto& p : r.pairs) {
        os << std::left << std::setw(8) << p.first << " * " << std::setw(8) << p.second << std::right
           << std::setw(4) << p.order << "  " << (p.passed() ? "PASS" : "FAIL") << "  (" << p.checks.size()
           << " checks)\n";
        for (const auto& c : p.checks)
          if (!c.passed) os << "    FAILED " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        for (const auto& a : p.annotations) os << "    note: " << a << '\n';
      }
      os << r.pairs.size() << " pairs, " << r.failures() << " failing\n";
      return os.str();
    }
  }
  return {};
}

std::string render_sweep_timings(const SweepResult& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << "first,second,order,milliseconds\n";
  for (const auto& p : r.pairs)
    os << csv_field(p.first) << ',' << csv_field(p.second) << ',' << p.order << ',' << p.milliseconds << '\n';
  return os.str();
}

}  // namespace prodspec
