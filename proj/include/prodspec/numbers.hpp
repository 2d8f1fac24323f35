#pragma once

#include <gmpxx.h>

#include <string>

namespace prodspec {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const Rational& v) { return v.get_str(10); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace prodspec
