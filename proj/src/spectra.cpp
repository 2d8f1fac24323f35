#include "prodspec/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "prodspec/errors.hpp"
#include "prodspec/matrix.hpp"
#include "prodspec/product.hpp"

namespace prodspec {

std::string_view kind_name(MatrixKind kind) { return kind == MatrixKind::Laplacian ? "L" : "Q"; }

ExactMatrix kind_matrix(const Graph& g, MatrixKind kind) {
  return kind == MatrixKind::Laplacian ? laplacian_matrix(g) : signless_laplacian_matrix(g);
}

RationalFunction coronal(const ExactMatrix& m) {
  auto fl = faddeev_leverrier(m);
  std::vector<Rational> num;
  num.reserve(fl.adjugate.size());
  for (const auto& b : fl.adjugate) num.emplace_back(b.entry_sum());
  return RationalFunction(Polynomial(std::move(num)), fl.char_poly);
}

RationalFunction laplacian_coronal(const Graph& g) {
  RationalFunction expected(Polynomial::constant(static_cast<unsigned long>(g.order())), Polynomial::x());
  auto via_adjugate = coronal(laplacian_matrix(g));
  if (!(via_adjugate == expected)) {
    fail(ErrorKind::Internal, "Laplacian coronal routes disagree: " + via_adjugate.to_string());
  }
  return expected;
}

RationalFunction signless_coronal_regular(const Graph& g, std::size_t r) {
  auto profile = degree_profile(g);
  if (!profile.regularity || *profile.regularity != r) {
    fail(ErrorKind::Precondition, "graph is not " + std::to_string(r) + "-regular");
  }
  RationalFunction expected(Polynomial::constant(static_cast<unsigned long>(g.order())),
                            Polynomial::linear(Rational(static_cast<unsigned long>(2 * r))));
  auto via_adjugate = coronal(signless_laplacian_matrix(g));
  if (!(via_adjugate == expected)) {
    fail(ErrorKind::Internal, "signless coronal routes disagree: " + via_adjugate.to_string());
  }
  return expected;
}

namespace {

struct ProductSetup {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  Rational pole_shift;  // eigenvalue of the second factor cancelled by the coronal pole
  Polynomial num;       // per-eigenvalue factor is num - mu * den
  Polynomial den;
};

ProductSetup setup(const Graph& first, const Graph& second, MatrixKind kind) {
  ProductSetup s;
  s.r1 = require_regular(first, "first factor");
  s.r2 = require_regular(second, "second factor");
  s.n1 = first.order();
  s.n2 = second.order();
  if (s.n1 == 0 || s.n2 == 0) fail(ErrorKind::Precondition, "product factors need at least one vertex");
  const Rational n2(static_cast<unsigned long>(s.n2));
  const Polynomial x = Polynomial::x();
  if (kind == MatrixKind::Laplacian) {
    // x - n2 - n2 mu - n2 * n2/(x - n2) = (x^2 - 2 n2 x - mu (n2 x - n2^2)) / (x - n2)
    s.pole_shift = 0;
    s.num = x * x - Polynomial::constant(2 * n2) * x;
    s.den = Polynomial::constant(n2) * x - Polynomial::constant(n2 * n2);
  } else {
    // x - n2 - n2 nu - n2 * n2/(x - n2 - 2 r2)
    s.pole_shift = Rational(static_cast<unsigned long>(2 * s.r2));
    Polynomial shifted = Polynomial::linear(n2);
    Polynomial pole = Polynomial::linear(n2 + s.pole_shift);
    s.num = shifted * pole - Polynomial::constant(n2 * n2);
    s.den = Polynomial::constant(n2) * pole;
  }
  return s;
}

}  // namespace

ClosedForm product_charpoly_closed(const Graph& first, const Graph& second, MatrixKind kind) {
  const auto s = setup(first, second, kind);
  const Rational n2(static_cast<unsigned long>(s.n2));
  const Polynomial f1 = char_poly(kind_matrix(first, kind));
  const Polynomial f2 = char_poly(kind_matrix(second, kind));

  ClosedForm out;
  out.factors.linear_power = Polynomial::linear(n2 * static_cast<unsigned long>(s.r1 + 1))
                                 .pow(static_cast<unsigned>(s.n1 * (s.n2 - 1)));

  const Polynomial f2_shifted = compose(f2, Polynomial::linear(n2));
  auto reduced = exact_divide(f2_shifted, Polynomial::linear(n2 + s.pole_shift));
  if (!reduced) {
    fail(ErrorKind::Internal, "shifted factor is not divisible by its pole; regularity assumption violated");
  }
  out.factors.shifted = reduced->pow(static_cast<unsigned>(s.n1));
  out.factors.composed = compose_rational(f1, s.num, s.den);

  out.poly = out.factors.linear_power * out.factors.shifted * out.factors.composed;
  if (out.poly.degree() != static_cast<int>(2 * s.n1 * s.n2) || !out.poly.is_monic() ||
      !out.poly.has_integer_coefficients()) {
    fail(ErrorKind::Internal, "closed-form polynomial is not monic integral of degree 2 n1 n2");
  }
  return out;
}

Polynomial product_L_charpoly_closed(const Graph& first, const Graph& second) {
  return product_charpoly_closed(first, second, MatrixKind::Laplacian).poly;
}

Polynomial product_Q_charpoly_closed(const Graph& first, const Graph& second) {
  return product_charpoly_closed(first, second, MatrixKind::SignlessLaplacian).poly;
}

Spectrum product_spectrum(const Graph& first, const Graph& second, MatrixKind kind, double tolerance) {
  const auto s = setup(first, second, kind);
  const Rational n2(static_cast<unsigned long>(s.n2));
  const std::size_t linear_mult = s.n1 * (s.n2 - 1);
  const Rational linear_value = n2 * static_cast<unsigned long>(s.r1 + 1);
  const ExactMatrix m1 = kind_matrix(first, kind);
  const ExactMatrix m2 = kind_matrix(second, kind);

  auto split1 = integer_roots(char_poly(m1));
  auto split2 = integer_roots(char_poly(m2));
  Spectrum spectrum;

  if (split1.remainder.is_constant() && split2.remainder.is_constant()) {
    spectrum.add(Eigenvalue::rational(linear_value), linear_mult);
    bool pole_removed = false;
    for (const auto& mu : split2.roots) {
      if (!pole_removed && Rational(mu) == s.pole_shift) {
        pole_removed = true;
        continue;
      }
      spectrum.add(Eigenvalue::rational(n2 + Rational(mu)), s.n1);
    }
    if (!pole_removed) fail(ErrorKind::Internal, "second factor spectrum lacks the cancelled pole");
    for (const auto& mu : split1.roots) {
      auto quad = s.num - Polynomial::constant(Rational(mu)) * s.den;
      auto c = quad.integer_coefficients();
      auto [lo, hi] = quadratic_roots(c[1], c[0]);
      spectrum.add(lo);
      spectrum.add(hi);
    }
    return spectrum;
  }

  // Irrational factor spectra: evaluate the same families numerically from
  // Jacobi eigenvalues of the factors. The exact trace comes from the
  // polynomial data (sum of quadratic root-sums is linear in mu).
  JacobiOptions opts;
  opts.relative_tolerance = tolerance;
  auto mu1 = symmetric_eigenvalues(m1, opts);
  auto mu2 = symmetric_eigenvalues(m2, opts);
  double bound = 0.0;
  for (const auto& e : mu1) bound = std::max(bound, e.as_numeric().tolerance);
  for (const auto& e : mu2) bound = std::max(bound, e.as_numeric().tolerance);
  const double n2d = static_cast<double>(s.n2);
  const double eps = std::max(bound * (2.0 + n2d), 1e-12);

  spectrum.add(Eigenvalue::numeric(linear_value.get_d(), eps), linear_mult);
  auto pole = std::min_element(mu2.begin(), mu2.end(), [&](const Eigenvalue& a, const Eigenvalue& b) {
    return std::abs(a.approx() - s.pole_shift.get_d()) < std::abs(b.approx() - s.pole_shift.get_d());
  });
  for (auto it = mu2.begin(); it != mu2.end(); ++it) {
    if (it == pole) continue;
    spectrum.add(Eigenvalue::numeric(n2d + it->approx(), eps), s.n1);
  }
  for (const auto& mu : mu1) {
    double m = mu.approx();
    double b = s.num.coeff(1).get_d() - m * s.den.coeff(1).get_d();
    double c = s.num.coeff(0).get_d() - m * s.den.coeff(0).get_d();
    double disc = std::max(0.0, b * b - 4.0 * c);
    double root = std::sqrt(disc);
    // Stable pair: q = -(b + sign(b) sqrt(disc))/2, roots q and c/q.
    double q = -0.5 * (b + (b >= 0 ? root : -root));
    double x1 = q;
    double x2 = q != 0.0 ? c / q : 0.0;
    spectrum.add(Eigenvalue::numeric(std::min(x1, x2), eps));
    spectrum.add(Eigenvalue::numeric(std::max(x1, x2), eps));
  }

  const unsigned long n1u = s.n1;
  Rational trace = linear_value * static_cast<unsigned long>(linear_mult);
  trace += Rational(n1u) * (n2 * static_cast<unsigned long>(s.n2 - 1) + Rational(m2.trace()) - s.pole_shift);
  trace -= Rational(n1u) * s.num.coeff(1) - Rational(m1.trace()) * s.den.coeff(1);
  spectrum.set_exact_trace(trace);
  return spectrum;
}

ClosedFormReport closed_form_report(const Graph& first, const Graph& second, MatrixKind kind, double tolerance) {
  auto closed = product_charpoly_closed(first, second, kind);
  auto prod = product(first, second);
  ClosedFormReport report{kind, closed.poly, char_poly(kind_matrix(prod.graph, kind)), false,
                          product_spectrum(first, second, kind, tolerance), closed.factors};
  report.equal = report.closed_poly == report.direct_poly;
  return report;
}

CospectralityResult cospectrality_check(const Graph& a, const Graph& b, const Graph& g, MatrixKind kind,
                                        Side side) {
  auto ra = require_regular(a, "first candidate");
  auto rb = require_regular(b, "second candidate");
  require_regular(g, "fixed factor");
  CospectralityResult result;
  if (side == Side::Left) {
    if (a.order() != b.order() || ra != rb) {
      fail(ErrorKind::Precondition, "left cospectrality needs candidates of equal order and regularity");
    }
    result.cospectral = product_charpoly_closed(a, g, kind).poly == product_charpoly_closed(b, g, kind).poly;
  } else {
    result.cospectral = product_charpoly_closed(g, a, kind).poly == product_charpoly_closed(g, b, kind).poly;
    result.coronal_hypothesis = coronal(kind_matrix(a, kind)) == coronal(kind_matrix(b, kind));
  }
  return result;
}

}  // namespace prodspec
