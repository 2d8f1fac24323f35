#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodspec/numbers.hpp"

namespace prodspec {

// Univariate polynomial over Q. Coefficients are stored in ascending degree
// order with no trailing zeros; the zero polynomial has no coefficients and
// degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<long> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  // x - root
  static Polynomial linear(const Rational& root);
  static Polynomial from_integers(const std::vector<BigInt>& ascending);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  bool is_monic() const;
  bool has_integer_coefficients() const;
  // Coefficients as integers; Error(Internal) when one is not integral.
  std::vector<BigInt> integer_coefficients() const;

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;

  Polynomial derivative() const;
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;
  // Scaled to coprime integer coefficients with positive leading term.
  Polynomial primitive() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable, descending: "x^3 - 6x^2 + 9x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division over Q. Error(Precondition) on a zero divisor.
PolynomialDivision divmod(const Polynomial& dividend, const Polynomial& divisor);

// dividend / divisor when the remainder vanishes.
std::optional<Polynomial> exact_divide(const Polynomial& dividend, const Polynomial& divisor);

// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

// p(x) evaluated at q(x).
Polynomial compose(const Polynomial& p, const Polynomial& q);

// den^{deg p} * p(num/den), a polynomial in x. Error(Precondition) on den = 0.
Polynomial compose_rational(const Polynomial& p, const Polynomial& num, const Polynomial& den);

// Reduced quotient of polynomials: coprime, denominator monic.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

struct IntegerRootSplit {
  std::vector<BigInt> roots;  // ascending, repeated by multiplicity
  Polynomial remainder;       // p / prod(x - root); has no integer roots
};

// Integer roots of a nonzero polynomial with integer coefficients. Candidates
// are divisors of the trailing nonzero coefficient inside the Fujiwara bound.
IntegerRootSplit integer_roots(const Polynomial& p);

// Exact square root of k when k is a perfect square >= 0.
std::optional<BigInt> is_perfect_square(const BigInt& k);

}  // namespace prodspec
