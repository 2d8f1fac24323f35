#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodspec/graph.hpp"
#include "prodspec/polynomial.hpp"
#include "prodspec/spectra.hpp"

namespace prodspec {

struct IntegralityVerdict {
  MatrixKind kind = MatrixKind::Laplacian;
  bool integral = false;
  std::vector<BigInt> roots;  // integer roots with multiplicity
  Polynomial remainder;       // constant iff integral
  Polynomial poly;            // the polynomial that was split
};

// Splits the exact char poly of L or Q into integer linear factors.
IntegralityVerdict is_integral(const Graph& g, MatrixKind kind);

// One per-eigenvalue quadratic of the closed form.
struct QuadraticCheck {
  BigInt eigenvalue;      // mu_1i (L) or nu_1i (Q)
  BigInt discriminant;    // of the quadratic
  bool integer_roots = false;
};

struct StructuralVerdict {
  bool integral = false;
  bool second_factor_integral = false;
  bool first_factor_integral = false;
  std::vector<QuadraticCheck> checks;  // one per distinct integer eigenvalue
  // "second-factor", "first-factor", "quadratic", or empty when integral.
  std::string failure;
  std::optional<BigInt> witness_discriminant;
  std::optional<Polynomial> witness_factor;
};

struct ProductIntegrality {
  IntegralityVerdict direct;
  StructuralVerdict structural;
};

// Decided twice: integer_roots on the closed-form polynomial, and
// structurally from the factors (second factor integral and every
// per-eigenvalue quadratic splitting over Z). Regular factors only.
// Error(Internal) if the routes disagree.
ProductIntegrality product_is_integral(const Graph& first, const Graph& second, MatrixKind kind);

}  // namespace prodspec
