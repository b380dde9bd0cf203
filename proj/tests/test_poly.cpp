#include <random>
#include <vector>

#include "charvar/poly.hpp"
#include "doctest.h"
#include "test_util.hpp"

using charvar::IntPolynomial;
using charvar::NotDivisible;
using testutil::poly;

namespace {

// Random polynomial with signed coefficients of up to 128 bits; degree is
// small because the interesting stress is coefficient width, not length.
IntPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg_dist(0, 12);
  int deg = deg_dist(rng);
  std::vector<mpz_class> coeffs;
  coeffs.reserve(static_cast<size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    mpz_class c = rng();
    c <<= 64;
    c += mpz_class(rng());
    if (rng() & 1u) c = -c;
    coeffs.push_back(c);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
  IntPolynomial p(std::vector<mpz_class>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == poly({1, 2}));
  CHECK(p.coeff(5) == 0);
  CHECK(p.coeff(-1) == 0);
}

TEST_CASE("zero polynomial sentinel") {
  IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == IntPolynomial::zero_degree);
  CHECK(z.degree() == -1);
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(z.leading_coeff() == 0);
  CHECK(z.to_string() == "0");
}

TEST_CASE("addition cancels and normalizes") {
  CHECK(poly({1, 1}) + poly({1, -1}) == IntPolynomial::constant(2));
  CHECK(IntPolynomial() + poly({3, 0, 5}) == poly({3, 0, 5}));
  CHECK((IntPolynomial::monomial(1, 2) + IntPolynomial::monomial(-1, 2))
            .is_zero());
}

TEST_CASE("multiplication basics") {
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
  CHECK(poly({2, 0, 7}) * IntPolynomial::constant(1) == poly({2, 0, 7}));
  CHECK(charvar::poly_pow(poly({1, 1}), 4) == poly({1, 4, 6, 4, 1}));
  CHECK(charvar::poly_pow(poly({1, -1}), 0) == IntPolynomial::constant(1));
  CHECK(charvar::poly_pow(poly({1, 0, 0, 1}), 2) == poly({1, 0, 0, 2, 0, 0, 1}));
}

TEST_CASE("degree law for products") {
  std::mt19937_64 rng(0x5eed1);
  for (int i = 0; i < 50; ++i) {
    IntPolynomial a = random_poly(rng);
    IntPolynomial b = random_poly(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(0x5eed2);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial a = random_poly(rng);
    IntPolynomial b = random_poly(rng);
    IntPolynomial c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == IntPolynomial());
  }
}

TEST_CASE("exact division round-trips") {
  std::mt19937_64 rng(0x5eed3);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial a = random_poly(rng);
    IntPolynomial b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(charvar::poly_divexact(a * b, b) == a);
  }
}

TEST_CASE("exact division examples") {
  CHECK(charvar::poly_divexact(poly({1, 0, -1}), poly({1, -1})) ==
        poly({1, 1}));
  CHECK(charvar::poly_divexact(poly({1, 0, 0, 0, 0, 0, -1}), poly({1, 0, -1})) ==
        poly({1, 0, 1, 0, 1}));
  CHECK(charvar::poly_divexact(IntPolynomial(), poly({1, 1})).is_zero());
}

TEST_CASE("division failure kinds are distinguished") {
  // (1+t^2)/(1+t) leaves remainder 2 at t = -1.
  CHECK_THROWS_AS(charvar::poly_divexact(poly({1, 0, 1}), poly({1, 1})),
                  NotDivisible);
  try {
    charvar::poly_divexact(poly({1, 0, 1}), poly({1, 1}));
  } catch (const NotDivisible& e) {
    CHECK(e.kind() == NotDivisible::Kind::remainder);
  }

  // (1+t)/2 divides with zero remainder but the quotient is not integral.
  try {
    charvar::poly_divexact(poly({1, 1}), IntPolynomial::constant(2));
    CHECK(false);
  } catch (const NotDivisible& e) {
    CHECK(e.kind() == NotDivisible::Kind::non_integral_quotient);
  }

  // Degree of the numerator below the divisor counts as a remainder.
  try {
    charvar::poly_divexact(poly({1, 1}), poly({1, 0, 1}));
    CHECK(false);
  } catch (const NotDivisible& e) {
    CHECK(e.kind() == NotDivisible::Kind::remainder);
  }
}

TEST_CASE("coefficients never overflow") {
  IntPolynomial p = charvar::poly_pow(poly({1, 1}), 200);
  CHECK(p.degree() == 200);
  mpz_class central = p.coeff(100);
  CHECK(central == charvar::binomial(200, 100));
  // Independently computed value, not routed through binomial().
  CHECK(central.get_str() ==
        "90548514656103281165404177077484163874504589675413336841320");
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(200) == 1);
}

TEST_CASE("binomial coefficients") {
  CHECK(charvar::binomial(4, 2) == 6);
  CHECK(charvar::binomial(6, 0) == 1);
  CHECK(charvar::binomial(6, 6) == 1);
  CHECK(charvar::binomial(5, 7) == 0);
  CHECK(charvar::binomial(2, 1) == 2);
}

TEST_CASE("evaluation") {
  IntPolynomial p = poly({3, -1, 2});
  CHECK(p.eval(0) == 3);
  CHECK(p.eval(2) == 9);
  CHECK(p.eval(-1) == 6);
  CHECK(IntPolynomial().eval(17) == 0);
}

TEST_CASE("printable form") {
  CHECK(poly({3, -1, 2}).to_string() == "2*t^2 - t + 3");
  CHECK(poly({0, 1}).to_string() == "t");
  CHECK(poly({0, 0, 0, 0, 0, 0, 16}).to_string() == "16*t^6");
}
