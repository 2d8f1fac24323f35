#include "doctest.h"

#include <cmath>

#include "prodspec/eigenvalue.hpp"
#include "prodspec/errors.hpp"
#include "prodspec/polynomial.hpp"

using namespace prodspec;

TEST_CASE("polynomial arithmetic") {
  Polynomial p{1, 2, 1};  // (x + 1)^2
  Polynomial q{1, 1};
  CHECK(q * q == p);
  CHECK(q.pow(3) == Polynomial{1, 3, 3, 1});
  CHECK(p - p == Polynomial());
  CHECK(Polynomial().degree() == -1);
  CHECK(p.derivative() == Polynomial{2, 2});
  CHECK(p(Rational(2)) == 9);
  CHECK(p.to_string() == "x^2 + 2x + 1");
  CHECK(Polynomial{0, 9, -6, 1}.to_string() == "x^3 - 6x^2 + 9x");
  CHECK(Polynomial{2, 4}.primitive() == Polynomial{1, 2});
  CHECK(Polynomial{2, 4}.monic() == Polynomial(std::vector<Rational>{Rational(1, 2), Rational(1)}));
}

TEST_CASE("division and gcd") {
  Polynomial a{-1, 0, 0, 1};  // x^3 - 1
  Polynomial b{-1, 1};
  auto qr = divmod(a, b);
  CHECK(qr.quotient == Polynomial{1, 1, 1});
  CHECK(qr.remainder.is_zero());
  CHECK(exact_divide(a, Polynomial{1, 1}) == std::nullopt);
  CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 2, 1}) == Polynomial{1, 1});
  CHECK_THROWS_AS(divmod(a, Polynomial()), Error);
}

TEST_CASE("composition") {
  Polynomial p{0, 0, 1};  // x^2
  CHECK(compose(p, Polynomial{1, 1}) == Polynomial{1, 2, 1});
  // den^2 * (num/den)^2 = num^2
  CHECK(compose_rational(p, Polynomial{0, 1}, Polynomial{1, 1}) == Polynomial{0, 0, 1});
  // x (x - 2) composed with (x^2 - 4x)/(2x - 4): the K2 (*) K2 block
  Polynomial lk2{0, -2, 1};
  Polynomial num{0, -4, 1}, den{-4, 2};
  auto c = compose_rational(lk2, num, den);
  CHECK(c == Polynomial{0, -4, 1} * Polynomial{8, -8, 1});
  auto split = integer_roots(c);
  CHECK(split.roots == std::vector<BigInt>{0, 4});
  CHECK(split.remainder == Polynomial{8, -8, 1});
  auto [lo, hi] = quadratic_roots(-8, 8);
  CHECK(lo.to_string() == "4 - 2*sqrt(2)");
  CHECK(hi.to_string() == "4 + 2*sqrt(2)");
}

TEST_CASE("integer roots") {
  auto f = Polynomial::linear(Rational(3)) * Polynomial::linear(Rational(3)) * Polynomial::linear(Rational(-2)) *
           Polynomial{1, 0, 1};
  auto split = integer_roots(f);
  CHECK(split.roots == std::vector<BigInt>{-2, 3, 3});
  CHECK(split.remainder == Polynomial{1, 0, 1});
  CHECK(integer_roots(Polynomial{0, 0, 1}).roots == std::vector<BigInt>{0, 0});
  // C5: x (x^2 - 5x + 5)^2
  auto c5 = Polynomial{0, 1} * Polynomial{5, -5, 1}.pow(2);
  CHECK(integer_roots(c5).roots == std::vector<BigInt>{0});
  CHECK(integer_roots(Polynomial{-2, 0, 1}).roots.empty());
}

TEST_CASE("perfect squares and square parts") {
  CHECK(is_perfect_square(0) == BigInt(0));
  CHECK(is_perfect_square(49) == BigInt(7));
  CHECK_FALSE(is_perfect_square(50));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK(split_square(72) == std::pair<BigInt, BigInt>{6, 2});
  CHECK(split_square(7) == std::pair<BigInt, BigInt>{1, 7});
}

TEST_CASE("surd normalization") {
  auto a = Eigenvalue::surd(8, 1, 8, 2, 1);  // (8 + sqrt 8)/2 = 4 + sqrt 2
  REQUIRE(a.is_surd());
  CHECK(a.as_surd() == QuadraticSurd{4, 1, 1, 2, 1});
  auto b = Eigenvalue::surd(8, 2, 8, 2, -1);  // (8 - 2 sqrt 8)/2 = 4 - 2 sqrt 2
  CHECK(b.to_string() == "4 - 2*sqrt(2)");
  CHECK(b.approx() == doctest::Approx(4 - 2 * std::sqrt(2.0)));
  auto r = Eigenvalue::surd(3, 1, 9, 2, -1);  // (3 - 3)/2 = 0
  REQUIRE(r.is_rational());
  CHECK(r.as_rational() == 0);
  auto half = Eigenvalue::surd(1, 1, 5, 2, 1);
  CHECK(half.to_string() == "(1 + sqrt(5))/2");
}

TEST_CASE("spectrum bookkeeping") {
  Spectrum s;
  s.add(Eigenvalue::rational(0));
  s.add(Eigenvalue::rational(4), 2);
  s.add(Eigenvalue::rational(4), 3);
  auto [lo, hi] = quadratic_roots(-8, 8);
  s.add(lo);
  CHECK_FALSE(s.trace_is_rational());
  s.add(hi);
  CHECK(s.trace_is_rational());
  CHECK(s.total() == 8);
  CHECK(s.trace() == 28);
  CHECK(s.entries().size() == 4);
  CHECK(s.approx_trace() == doctest::Approx(28));
  CHECK_THROWS_AS(s.add(Eigenvalue::numeric(1.0, 1e-12)), Error);
}
