#include "prodspec/integrality.hpp"

#include "prodspec/errors.hpp"
#include "prodspec/matrix.hpp"

namespace prodspec {

IntegralityVerdict is_integral(const Graph& g, MatrixKind kind) {
  IntegralityVerdict v;
  v.kind = kind;
  v.poly = char_poly(kind_matrix(g, kind));
  auto split = integer_roots(v.poly);
  v.roots = std::move(split.roots);
  v.remainder = std::move(split.remainder);
  v.integral = v.remainder.is_constant();
  return v;
}

ProductIntegrality product_is_integral(const Graph& first, const Graph& second, MatrixKind kind) {
  auto r2 = require_regular(second, "second factor");
  require_regular(first, "first factor");
  ProductIntegrality out;

  auto closed = product_charpoly_closed(first, second, kind);
  {
    auto split = integer_roots(closed.poly);
    out.direct.kind = kind;
    out.direct.poly = closed.poly;
    out.direct.roots = std::move(split.roots);
    out.direct.remainder = std::move(split.remainder);
    out.direct.integral = out.direct.remainder.is_constant();
  }

  // Per-eigenvalue factor num - mu * den, as in the closed form.
  const Rational n2(static_cast<unsigned long>(second.order()));
  const Polynomial x = Polynomial::x();
  Polynomial num;
  Polynomial den;
  if (kind == MatrixKind::Laplacian) {
    num = x * x - Polynomial::constant(2 * n2) * x;
    den = Polynomial::constant(n2) * x - Polynomial::constant(n2 * n2);
  } else {
    Polynomial pole = Polynomial::linear(n2 + Rational(static_cast<unsigned long>(2 * r2)));
    num = Polynomial::linear(n2) * pole - Polynomial::constant(n2 * n2);
    den = Polynomial::constant(n2) * pole;
  }

  auto& s = out.structural;
  const auto f1 = char_poly(kind_matrix(first, kind));
  const auto f2 = char_poly(kind_matrix(second, kind));
  auto split2 = integer_roots(f2);
  auto split1 = integer_roots(f1);
  s.second_factor_integral = split2.remainder.is_constant();
  s.first_factor_integral = split1.remainder.is_constant();

  bool quadratics_ok = true;
  if (s.first_factor_integral) {
    std::optional<BigInt> previous;
    for (const auto& mu : split1.roots) {
      if (previous && *previous == mu) continue;
      previous = mu;
      auto c = (num - Polynomial::constant(Rational(mu)) * den).integer_coefficients();
      QuadraticCheck check{mu, c[1] * c[1] - 4 * c[0], false};
      if (auto root = is_perfect_square(check.discriminant)) {
        BigInt parity = c[1] + *root;
        check.integer_roots = mpz_even_p(parity.get_mpz_t()) != 0;
      }
      if (!check.integer_roots && quadratics_ok) {
        quadratics_ok = false;
        s.witness_discriminant = check.discriminant;
        s.witness_factor = Polynomial::from_integers({c[0], c[1], BigInt(1)});
      }
      s.checks.push_back(std::move(check));
    }
  }

  if (!s.second_factor_integral) {
    s.failure = "second-factor";
    s.witness_factor = split2.remainder;
    s.witness_discriminant.reset();
  } else if (!s.first_factor_integral) {
    s.failure = "first-factor";
    s.witness_factor = integer_roots(compose_rational(f1, num, den)).remainder;
  } else if (!quadratics_ok) {
    s.failure = "quadratic";
  }
  s.integral = s.failure.empty();

  if (s.integral != out.direct.integral) {
    fail(ErrorKind::Internal, "integrality routes disagree");
  }
  return out;
}

}  // namespace prodspec
