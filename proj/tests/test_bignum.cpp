#include <doctest.h>

#include "geneul/bignum.hpp"
#include "geneul/words.hpp"
#include "oracles.hpp"

using geneul::BigNat;
using geneul::binomial;
using geneul::factorial;
using geneul::pow_nat;
using geneul::total_words;

TEST_CASE("binomial small entries and the zero convention") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(-3, 2) == 0);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (long long n = 1; n <= 40; ++n)
    for (long long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial symmetry") {
  for (long long n = 0; n <= 40; ++n)
    for (long long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("binomial agrees with the factorial quotient") {
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(binomial(n, k) ==
            factorial(n) / (factorial(k) * factorial(n - k)));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigNat("2432902008176640000"));
  CHECK(factorial(25) == BigNat("15511210043330985984000000"));
}

TEST_CASE("pow_nat") {
  CHECK(pow_nat(0, 0) == 1);
  CHECK(pow_nat(0, 3) == 0);
  CHECK(pow_nat(2, 10) == 1024);
  CHECK(pow_nat(BigNat(10), 30) == BigNat("1" + std::string(30, '0')));
}

TEST_CASE("total_words on known points") {
  CHECK(total_words(1, 2, 1) == 1);
  // Frozen from the odometer recount below: 2^2 * 2! / 1 = 8 words of
  // {1, 2} with 2 colors.
  CHECK(total_words(2, 1, 2) == 8);
  // 6!/(2!)^3 = 90 arrangements of {1^2, 2^2, 3^2} with one color.
  CHECK(total_words(3, 2, 1) == 90);
}

TEST_CASE("total_words matches the brute-force recount") {
  for (int a = 1; a <= 2; ++a)
    for (int r = 1; r <= 2; ++r)
      for (int p = 1; p <= 3; ++p) {
        const geneul::Params params{a, 0, r, p};
        CHECK(total_words(p, r, a) == oracles::all_words(params).size());
      }
}

TEST_CASE("total_words rejects non-positive parameters") {
  CHECK_THROWS_AS(total_words(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(total_words(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(total_words(1, 1, 0), std::invalid_argument);
}
