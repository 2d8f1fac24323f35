#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prodspec/eigenvalue.hpp"
#include "prodspec/graph.hpp"
#include "prodspec/integrality.hpp"
#include "prodspec/invariants.hpp"
#include "prodspec/matrix.hpp"
#include "prodspec/polynomial.hpp"
#include "prodspec/product.hpp"
#include "prodspec/spectra.hpp"
#include "prodspec/sweep.hpp"

namespace prodspec {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Csv, Plain };

// Ascending decimal coefficient strings.
Json to_json(const Polynomial& p);
// Row-major arrays of decimal strings.
Json to_json(const ExactMatrix& m);
Json to_json(const Eigenvalue& e);
Json to_json(const Spectrum& s);
Json to_json(const ClosedFormReport& r);
Json to_json(const InvariantReport& r);
Json to_json(const IntegralityVerdict& v);
Json to_json(const ProductIntegrality& v);
Json to_json(const ProductLabeling& labeling);

Polynomial polynomial_from_json(const Json& j);
ExactMatrix matrix_from_json(const Json& j);

// Text renderings for the command-line front end. JSON payloads carry
// "schema": 1 and no timing data, so they are byte-stable.
std::string render_product(const ProductGraph& p, OutputFormat format);
std::string render_closed_form(const ClosedFormReport& r, OutputFormat format);
std::string render_invariants(const std::vector<InvariantReport>& reports, OutputFormat format);
std::string render_integrality(const ProductIntegrality& v, OutputFormat format);
std::string render_sweep(const SweepResult& r, OutputFormat format);
// Per-pair timings, CSV.
std::string render_sweep_timings(const SweepResult& r);

}  // namespace prodspec
