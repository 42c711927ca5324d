#include "geneul/bignum.hpp"

#include <stdexcept>

namespace geneul {

BigNat binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat result = 1;
  for (long long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: result is C(n, i+1) after this step
  }
  return result;
}

BigNat factorial(unsigned n) {
  BigNat result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigNat pow_nat(const BigNat& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigNat total_words(int symbols, int multiplicity, int colors) {
  if (symbols < 1 || multiplicity < 1 || colors < 1)
    throw std::invalid_argument("total_words: all parameters must be >= 1");
  // (rp)!/(r!)^p equals the product of C(v*r, r) over v = 1..p.
  BigNat count = pow_nat(colors, static_cast<unsigned>(multiplicity) *
                                     static_cast<unsigned>(symbols));
  for (int v = 1; v <= symbols; ++v)
    count *= binomial(static_cast<long long>(v) * multiplicity, multiplicity);
  return count;
}

}  // namespace geneul
