#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace geneul {

// All counts are exact. BigNat holds non-negative results; BigInt is the
// signed accumulator used inside alternating sums.
using BigNat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;

// C(n, k) with the combinatorial zero convention: 0 whenever k < 0,
// k > n, or n < 0. Computed multiplicatively; every intermediate
// division is exact.
BigNat binomial(long long n, long long k);

BigNat factorial(unsigned n);

// base^exp with 0^0 = 1.
BigNat pow_nat(const BigNat& base, unsigned exp);

// Number of colored multipermutations of {1^r, ..., p^r} with a colors:
// a^(rp) * (rp)! / (r!)^p.
BigNat total_words(int symbols, int multiplicity, int colors);

}  // namespace geneul
