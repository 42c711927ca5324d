#pragma once

#include <vector>

#include "geneul/bignum.hpp"
#include "geneul/words.hpp"

namespace geneul {

// Row p of the classical Eulerian triangle: values[i] = <p, i> = number
// of permutations of {1..p} with i descents, i in [0, p-1].
struct EulerianRow {
  int length = 1;
  std::vector<BigNat> values;
};

// Full row by the recurrence <p,i> = (p-i)<p-1,i-1> + (i+1)<p-1,i> from
// <1,0> = 1.
EulerianRow eulerian_recurrence(int length);

// <p, i> by the alternating sum over binomials times powers. Returns 0
// outside [0, p-1].
BigNat eulerian_explicit(int length, long long descents);

// A_{a,b,r}(p, i): the number of colored multipermutations with i weak
// descents at the threshold,
//   sum_{j=0}^{i} (-1)^j C(rp+1, j) C(a(i-j)+b, r)^p.
// Returns 0 for i outside [0, rp]. Requires 0 <= b < a; the alternating
// sum is accumulated in signed arithmetic and checked non-negative.
BigNat gen_eulerian_closed(const Params& params, long long weak_descents);

// Number of words with exactly i non-terminal weak descents,
//   sum_{j=0}^{i+1} (-1)^j C(rp+1, j) C(a(i-j+1), r)^p.
// Equals gen_eulerian_closed with threshold 0 at index i+1.
BigNat nonterminal_count_closed(int colors, int multiplicity, int symbols,
                                long long descents);

struct GenEulerianRow {
  Params params;
  std::vector<BigNat> values;  // index i in [0, rp]

  BigNat sum() const;
};

// values[i] = gen_eulerian_closed(params, i); the row sum is checked
// against total_words.
GenEulerianRow gen_eulerian_row(const Params& params);

// The ascent-counting variant: A'(p, i) = A(p, rp - i), so the ascent
// row is the reverse of the descent row.
BigNat ascent_variant(const Params& params, long long weak_ascents);

// floor/remainder split of a threshold b >= 0 against the color count:
// C(a*n + b, r) = C(a*(n + shift) + reduced, r) for every n >= 0.
struct ThresholdNormalization {
  int shift = 0;    // floor(b / a)
  int reduced = 0;  // b - a * shift, in [0, a)
};

ThresholdNormalization normalize_threshold(int colors, int threshold);

}  // namespace geneul
