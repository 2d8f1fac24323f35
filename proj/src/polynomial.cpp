#include "prodspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "prodspec/errors.hpp"

namespace prodspec {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::x() { return Polynomial{0, 1}; }

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(std::vector<Rational>{-root, Rational(1)}); }

Polynomial Polynomial::from_integers(const std::vector<BigInt>& ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (const auto& v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::Precondition, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> Polynomial::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) fail(ErrorKind::Internal, "polynomial has a non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : coeffs_) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return from_integers(ints);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    Rational c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) {
      if (mag.get_den() != 1 && k > 0) os << '(' << mag.get_str() << ')';
      else os << mag.get_str();
    }
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

PolynomialDivision divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) fail(ErrorKind::Precondition, "polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  int dd = divisor.degree();
  int nd = dividend.degree();
  if (nd < dd) return {Polynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1), Rational(0));
  const auto& dc = divisor.coefficients();
  Rational lead_inv = 1 / divisor.leading();
  for (int k = nd - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial::constant(*it);
  return acc;
}

Polynomial compose_rational(const Polynomial& p, const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) fail(ErrorKind::Precondition, "compose_rational: zero denominator");
  if (p.is_zero()) return p;
  auto d = static_cast<std::size_t>(p.degree());
  std::vector<Polynomial> num_pow{Polynomial::constant(1)};
  std::vector<Polynomial> den_pow{Polynomial::constant(1)};
  for (std::size_t k = 1; k <= d; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Polynomial out;
  for (std::size_t k = 0; k <= d; ++k) {
    if (p.coeff(k) == 0) continue;
    out += p.coeff(k) * (num_pow[k] * den_pow[d - k]);
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) fail(ErrorKind::Precondition, "rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = Polynomial{};
    den_ = Polynomial::constant(1);
    return;
  }
  auto g = gcd(numerator, denominator);
  num_ = divmod(numerator, g).quotient;
  den_ = divmod(denominator, g).quotient;
  Rational lead = den_.leading();
  num_ *= 1 / lead;
  den_ *= 1 / lead;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::constant(1)) return num_.to_string();
  auto wrap = [](const Polynomial& p) {
    auto s = p.to_string();
    return p.coefficients().size() > 1 && s.find_first_of("+-", 1) != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

// Integer Horner evaluation.
BigInt eval_int(const std::vector<BigInt>& c, const BigInt& t) {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Quotient of c by (x - r), r a root; exact over Z.
std::vector<BigInt> deflate(const std::vector<BigInt>& c, const BigInt& r) {
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    carry = carry * r + c[k + 1];
    q[k] = carry;
  }
  return q;
}

// 2 * max_k ceil(|a_{n-k}/a_n|^{1/k}) with the last ratio halved; every
// complex root lies within it.
BigInt fujiwara_bound(const std::vector<BigInt>& c) {
  std::size_t n = c.size() - 1;
  BigInt lead = abs(c[n]);
  BigInt best = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt num = abs(c[n - k]);
    BigInt den = k == n ? BigInt(2 * lead) : lead;
    BigInt ratio_ceil = (num + den - 1) / den;
    BigInt root;
    mpz_root(root.get_mpz_t(), ratio_ceil.get_mpz_t(), static_cast<unsigned long>(k));
    root += 1;
    if (root > best) best = root;
  }
  return 2 * best;
}

}  // namespace

IntegerRootSplit integer_roots(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "integer_roots of the zero polynomial");
  auto c = p.integer_coefficients();
  IntegerRootSplit split;

  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  split.roots.assign(zeros, BigInt(0));

  if (c.size() > 1) {
    BigInt bound = fujiwara_bound(c);
    std::vector<BigInt> found;
    for (BigInt t = 1; t <= bound && c.size() > 1; ++t) {
      for (int sgn : {-1, 1}) {
        if (c.size() <= 1) break;
        BigInt r = sgn * t;
        if (!mpz_divisible_p(c[0].get_mpz_t(), t.get_mpz_t())) continue;
        while (c.size() > 1 && eval_int(c, r) == 0) {
          c = deflate(c, r);
          found.push_back(r);
        }
      }
    }
    split.roots.insert(split.roots.end(), found.begin(), found.end());
  }
  std::sort(split.roots.begin(), split.roots.end());
  split.remainder = Polynomial::from_integers(c);
  return split;
}

std::optional<BigInt> is_perfect_square(const BigInt& k) {
  if (k < 0 || !mpz_perfect_square_p(k.get_mpz_t())) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), k.get_mpz_t());
  return root;
}

}  // namespace prodspec
