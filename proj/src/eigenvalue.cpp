#include "prodspec/eigenvalue.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "prodspec/errors.hpp"

namespace prodspec {

std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  if (n <= 0) fail(ErrorKind::Precondition, "split_square needs a positive integer");
  BigInt rest = n;
  BigInt k = 1;
  BigInt d = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) d *= p;
  }
  d *= rest;
  return {k, d};
}

Eigenvalue Eigenvalue::rational(const Rational& r) {
  Rational v = r;
  v.canonicalize();
  return Eigenvalue(Storage{v});
}

Eigenvalue Eigenvalue::surd(const BigInt& a_in, const BigInt& b_in, const BigInt& d_in, const BigInt& c_in,
                            int sign) {
  if (c_in == 0) fail(ErrorKind::Precondition, "surd with zero denominator");
  if (d_in < 0) fail(ErrorKind::Precondition, "surd with negative radicand");
  BigInt a = a_in;
  BigInt b = b_in;
  BigInt c = c_in;
  int s = sign >= 0 ? 1 : -1;
  if (c < 0) {
    a = -a;
    c = -c;
    s = -s;
  }
  if (b < 0) {
    b = -b;
    s = -s;
  }
  if (b == 0 || d_in == 0) return rational(make_rational(a, c));
  auto [k, d] = split_square(d_in);
  b *= k;
  if (d == 1) return rational(make_rational(a + s * b, c));
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return Eigenvalue(Storage{QuadraticSurd{a / g, b / g, c / g, d, s}});
}

Eigenvalue Eigenvalue::numeric(double value, double tolerance) {
  return Eigenvalue(Storage{NumericValue{value, tolerance}});
}

double Eigenvalue::approx() const {
  if (is_rational()) return as_rational().get_d();
  if (is_numeric()) return as_numeric().value;
  const auto& q = as_surd();
  return (q.a.get_d() + q.sign * q.b.get_d() * std::sqrt(q.d.get_d())) / q.c.get_d();
}

std::string Eigenvalue::to_string() const {
  if (is_rational()) return as_rational().get_str();
  if (is_numeric()) {
    std::ostringstream os;
    os.precision(17);
    os << as_numeric().value;
    return os.str();
  }
  const auto& q = as_surd();
  std::ostringstream os;
  std::string root = (q.b == 1 ? std::string() : q.b.get_str() + "*") + "sqrt(" + q.d.get_str() + ")";
  if (q.a == 0) {
    os << (q.sign < 0 ? "-" : "") << root;
  } else {
    os << q.a.get_str() << (q.sign < 0 ? " - " : " + ") << root;
  }
  if (q.c == 1) return os.str();
  return (q.a == 0 ? os.str() : "(" + os.str() + ")") + "/" + q.c.get_str();
}

std::pair<Eigenvalue, Eigenvalue> quadratic_roots(const BigInt& b, const BigInt& c) {
  BigInt disc = b * b - 4 * c;
  if (disc < 0) fail(ErrorKind::Internal, "quadratic with complex roots");
  return {Eigenvalue::surd(-b, 1, disc, 2, -1), Eigenvalue::surd(-b, 1, disc, 2, 1)};
}

void Spectrum::add(const Eigenvalue& value, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  if (total_ > 0 && entries_.front().value.is_exact() != value.is_exact()) {
    fail(ErrorKind::Internal, "spectrum mixes exact and numeric eigenvalues");
  }
  total_ += multiplicity;
  if (value.is_rational()) {
    trace_ += value.as_rational() * static_cast<unsigned long>(multiplicity);
  } else if (value.is_surd()) {
    const auto& q = value.as_surd();
    trace_ += make_rational(q.a, q.c) * static_cast<unsigned long>(multiplicity);
    irrational_trace_[q.d] += make_rational(q.sign * q.b, q.c) * static_cast<unsigned long>(multiplicity);
  }

  for (auto& e : entries_) {
    bool same = value.is_exact()
                    ? e.value == value
                    : std::abs(e.value.approx() - value.approx()) <=
                          std::max(e.value.as_numeric().tolerance, value.as_numeric().tolerance);
    if (same) {
      e.multiplicity += multiplicity;
      return;
    }
  }
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), value.approx(),
                              [](double v, const Entry& e) { return v < e.value.approx(); });
  entries_.insert(pos, Entry{value, multiplicity});
}

bool Spectrum::trace_is_rational() const {
  return std::all_of(irrational_trace_.begin(), irrational_trace_.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

double Spectrum::approx_trace() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.value.approx() * static_cast<double>(e.multiplicity);
  return sum;
}

std::vector<double> Spectrum::flattened() const {
  std::vector<double> out;
  out.reserve(total_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value.approx());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prodspec
