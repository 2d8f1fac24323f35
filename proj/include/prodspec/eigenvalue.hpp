#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prodspec/numbers.hpp"

namespace prodspec {

// (a + sign * b * sqrt(d)) / c in lowest terms: c > 0, b > 0, d > 1
// square-free, gcd(a, b, c) = 1.
//
// The radicand alone cannot carry the coefficient (4 + 2*sqrt(2) would need
// d = 8), hence the explicit b.
struct QuadraticSurd {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt d;
  int sign = 1;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

struct NumericValue {
  double value = 0.0;
  double tolerance = 0.0;

  friend bool operator==(const NumericValue&, const NumericValue&) = default;
};

class Eigenvalue {
 public:
  static Eigenvalue rational(const Rational& r);
  // (a + sign*b*sqrt(d))/c, normalized; collapses to a rational when d*b^2
  // is a perfect square.
  static Eigenvalue surd(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& c, int sign);
  static Eigenvalue numeric(double value, double tolerance);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_surd() const { return std::holds_alternative<QuadraticSurd>(value_); }
  bool is_numeric() const { return std::holds_alternative<NumericValue>(value_); }
  bool is_exact() const { return !is_numeric(); }

  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const QuadraticSurd& as_surd() const { return std::get<QuadraticSurd>(value_); }
  const NumericValue& as_numeric() const { return std::get<NumericValue>(value_); }

  double approx() const;
  std::string to_string() const;

  friend bool operator==(const Eigenvalue& a, const Eigenvalue& b) { return a.value_ == b.value_; }

 private:
  using Storage = std::variant<Rational, QuadraticSurd, NumericValue>;
  explicit Eigenvalue(Storage v) : value_(std::move(v)) {}
  Storage value_;
};

// Both roots of x^2 + b x + c, smaller first. Error(Internal) if the
// discriminant is negative.
std::pair<Eigenvalue, Eigenvalue> quadratic_roots(const BigInt& b, const BigInt& c);

// Square-free part: returns (k, d) with n = k^2 d, d square-free. n > 0.
std::pair<BigInt, BigInt> split_square(const BigInt& n);

// Multiset of eigenvalues. Entries are sorted by value and never mix exact
// with numeric values. `trace` is the exact eigenvalue sum, which numeric
// spectra carry from the polynomial data they were built from.
class Spectrum {
 public:
  struct Entry {
    Eigenvalue value;
    std::size_t multiplicity;
  };

  Spectrum() = default;

  // Adds `multiplicity` copies; exact values merge structurally, numeric
  // values merge when within their tolerance.
  void add(const Eigenvalue& value, std::size_t multiplicity = 1);
  void set_exact_trace(const Rational& t) { trace_ = t; }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t total() const noexcept { return total_; }
  bool exact() const noexcept { return total_ == 0 || entries_.front().value.is_exact(); }
  const Rational& trace() const noexcept { return trace_; }
  // True when the sqrt parts of all surd entries cancel, so trace() is the
  // full eigenvalue sum.
  bool trace_is_rational() const;
  double approx_trace() const;

  // Values expanded by multiplicity, ascending.
  std::vector<double> flattened() const;

 private:
  std::vector<Entry> entries_;
  std::size_t total_ = 0;
  Rational trace_ = 0;
  std::map<BigInt, Rational> irrational_trace_;  // radicand -> coefficient
};

}  // namespace prodspec
