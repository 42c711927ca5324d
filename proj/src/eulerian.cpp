#include "geneul/eulerian.hpp"

#include <stdexcept>
#include <utility>

namespace geneul {

EulerianRow eulerian_recurrence(int length) {
  if (length < 1) throw std::invalid_argument("row length must be >= 1");
  std::vector<BigNat> row = {1};
  for (int p = 2; p <= length; ++p) {
    std::vector<BigNat> next(p);
    for (int i = 0; i < p; ++i) {
      BigNat value = 0;
      if (i >= 1) value += (p - i) * row[i - 1];
      if (i <= p - 2) value += (i + 1) * row[i];
      next[i] = std::move(value);
    }
    row = std::move(next);
  }
  return {length, std::move(row)};
}

BigNat eulerian_explicit(int length, long long descents) {
  if (length < 1) throw std::invalid_argument("row length must be >= 1");
  if (descents < 0 || descents >= length) return 0;
  BigInt sum = 0;
  for (long long j = 0; j <= descents + 1; ++j) {
    BigInt term = binomial(length + 1, j) *
                  pow_nat(BigNat(descents - j + 1),
                          static_cast<unsigned>(length));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum < 0)
    throw std::logic_error("Eulerian alternating sum came out negative");
  return sum;
}

BigNat gen_eulerian_closed(const Params& params, long long weak_descents) {
  validate_params(params);
  const long long rp = params.word_length();
  if (weak_descents < 0 || weak_descents > rp) return 0;
  BigInt sum = 0;
  for (long long j = 0; j <= weak_descents; ++j) {
    BigInt term =
        binomial(rp + 1, j) *
        pow_nat(binomial(static_cast<long long>(params.colors) *
                                 (weak_descents - j) +
                             params.threshold,
                         params.multiplicity),
                static_cast<unsigned>(params.symbols));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  // Guaranteed non-negative for 0 <= b < a; a negative value is a bug,
  // not a domain case.
  if (sum < 0)
    throw std::logic_error(
        "generalized Eulerian alternating sum came out negative");
  return sum;
}

BigNat nonterminal_count_closed(int colors, int multiplicity, int symbols,
                                long long descents) {
  validate_params({colors, 0, multiplicity, symbols});
  if (descents < 0) return 0;
  const long long rp = static_cast<long long>(multiplicity) * symbols;
  BigInt sum = 0;
  for (long long j = 0; j <= descents + 1; ++j) {
    BigInt term =
        binomial(rp + 1, j) *
        pow_nat(binomial(static_cast<long long>(colors) * (descents - j + 1),
                         multiplicity),
                static_cast<unsigned>(symbols));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum < 0)
    throw std::logic_error(
        "non-terminal alternating sum came out negative");
  return sum;
}

BigNat GenEulerianRow::sum() const {
  BigNat total = 0;
  for (const BigNat& value : values) total += value;
  return total;
}

GenEulerianRow gen_eulerian_row(const Params& params) {
  GenEulerianRow row;
  row.params = params;
  const int rp = params.word_length();
  row.values.reserve(rp + 1);
  for (int i = 0; i <= rp; ++i)
    row.values.push_back(gen_eulerian_closed(params, i));
  if (row.sum() !=
      total_words(params.symbols, params.multiplicity, params.colors))
    throw std::logic_error("row sum does not match the total word count");
  return row;
}

BigNat ascent_variant(const Params& params, long long weak_ascents) {
  return gen_eulerian_closed(params, params.word_length() - weak_ascents);
}

ThresholdNormalization normalize_threshold(int colors, int threshold) {
  if (colors < 1) throw std::invalid_argument("color count must be >= 1");
  if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");
  ThresholdNormalization result;
  result.shift = threshold / colors;
  result.reduced = threshold - colors * result.shift;
  return result;
}

}  // namespace geneul
