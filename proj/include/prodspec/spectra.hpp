#pragma once

#include <optional>
#include <string_view>

#include "prodspec/eigenvalue.hpp"
#include "prodspec/graph.hpp"
#include "prodspec/polynomial.hpp"

namespace prodspec {

enum class MatrixKind { Laplacian, SignlessLaplacian };

std::string_view kind_name(MatrixKind kind);  // "L" / "Q"
ExactMatrix kind_matrix(const Graph& g, MatrixKind kind);

// 1^T (xI - M)^{-1} 1 from the Faddeev-LeVerrier adjugate series.
RationalFunction coronal(const ExactMatrix& m);

// n/x. Built from L 1 = 0 and checked against the adjugate route; a mismatch
// throws Error(Internal).
RationalFunction laplacian_coronal(const Graph& g);

// n/(x - 2r) for an r-regular graph, checked against the adjugate route.
RationalFunction signless_coronal_regular(const Graph& g, std::size_t r);

struct ClosedFormFactors {
  Polynomial linear_power;  // (x - n2(r1+1))^{n1(n2-1)}
  Polynomial shifted;       // [f(M2, x - n2) / (x - n2 - s)]^{n1}, s = 0 (L) or 2 r2 (Q)
  Polynomial composed;      // den^{n1} f(M1, num/den)
};

struct ClosedForm {
  Polynomial poly;
  ClosedFormFactors factors;
};

// Closed-form characteristic polynomial of L or Q of first (*) second for
// regular factors (Error(Precondition) otherwise). The product over factor
// eigenvalues is one exact composition of f(M1, .) with a rational function,
// so no eigenvalue of either factor is ever computed.
ClosedForm product_charpoly_closed(const Graph& first, const Graph& second, MatrixKind kind);
Polynomial product_L_charpoly_closed(const Graph& first, const Graph& second);
Polynomial product_Q_charpoly_closed(const Graph& first, const Graph& second);

// Spectrum read off the closed form: the linear family, the shifted spectrum
// of the second factor with the cancelled pole removed, and the two roots of
// each per-eigenvalue quadratic. Exact (rationals and quadratic surds) when
// both factor spectra are integral, otherwise numeric via Jacobi on the
// factors.
Spectrum product_spectrum(const Graph& first, const Graph& second, MatrixKind kind,
                          double tolerance = 1e-12);

struct ClosedFormReport {
  MatrixKind kind;
  Polynomial closed_poly;
  Polynomial direct_poly;
  bool equal = false;
  Spectrum spectrum;
  ClosedFormFactors factors;
};

// Closed form, direct char poly of the explicit product, and spectrum.
ClosedFormReport closed_form_report(const Graph& first, const Graph& second, MatrixKind kind,
                                    double tolerance = 1e-12);

enum class Side { Left, Right };

struct CospectralityResult {
  bool cospectral = false;
  // Right side only: whether the coronals of the two swapped factors agree.
  std::optional<bool> coronal_hypothesis;
};

// Left: compares (a (*) g) with (b (*) g). Right: (g (*) a) with (g (*) b).
CospectralityResult cospectrality_check(const Graph& a, const Graph& b, const Graph& g, MatrixKind kind,
                                        Side side);

}  // namespace prodspec
