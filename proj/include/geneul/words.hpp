#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geneul/bignum.hpp"

namespace geneul {

// The quadruple governing a family of colored multipermutations:
// `colors` (a) is the number of colors, `threshold` (b) decides whether
// the final entry counts as a terminal descent, `multiplicity` (r) is the
// number of copies of each value, `symbols` (p) the number of distinct
// values.
struct Params {
  int colors = 1;
  int threshold = 0;
  int multiplicity = 1;
  int symbols = 1;

  int word_length() const { return multiplicity * symbols; }

  friend bool operator==(const Params&, const Params&) = default;
};

// Throws std::invalid_argument unless colors, multiplicity, symbols >= 1
// and 0 <= threshold < colors.
void validate_params(const Params& params);

// One letter of a colored word. The total order is lexicographic first
// on color, then on value:
//   1^c1 < 2^c1 < ... < p^c1 < 1^c2 < ... < p^ca.
struct ColoredEntry {
  int value = 1;  // in [1, symbols]
  int color = 1;  // in [1, colors]

  friend std::strong_ordering operator<=>(const ColoredEntry& lhs,
                                          const ColoredEntry& rhs) {
    if (auto cmp = lhs.color <=> rhs.color; cmp != 0) return cmp;
    return lhs.value <=> rhs.value;
  }
  friend bool operator==(const ColoredEntry&, const ColoredEntry&) = default;
};

struct ColoredWord {
  std::vector<ColoredEntry> entries;

  int length() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const ColoredWord&, const ColoredWord&) = default;
};

// Throws ValidationError unless w is a colored multipermutation of
// {1^r, ..., p^r} with every color in [1, a].
void validate_word(const ColoredWord& w, const Params& params);

// Number of adjacent pairs with left >= right in the colored order.
int nonterminal_weak_descents(const ColoredWord& w);

// nonterminal_weak_descents plus the terminal descent: the final entry
// counts iff its color exceeds the threshold. Takes the threshold
// explicitly so one enumeration pass can serve several thresholds.
int weak_descents(const ColoredWord& w, int threshold);

// Appends the entry (value 1, color threshold+1). The result is an
// augmented word and is exempt from the r-copies invariant.
ColoredWord augment(const ColoredWord& w, int threshold);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Visits every colored multipermutation for params exactly once, in
// lexicographic order of the entry sequence under the colored order.
// Throws BudgetError up front when the total count exceeds the budget.
void for_each_word(const Params& params,
                   const std::function<void(const ColoredWord&)>& visit,
                   std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<ColoredWord> enumerate_words(
    const Params& params, std::uint64_t budget = kDefaultEnumerationBudget);

// Entry i = number of words with exactly i weak descents at
// params.threshold, for i in [0, rp]. Entries sum to total_words.
std::vector<BigNat> descent_distribution(
    const Params& params, std::uint64_t budget = kDefaultEnumerationBudget);

// Entry i = number of words with exactly i non-terminal weak descents,
// for i in [0, rp-1].
std::vector<BigNat> nonterminal_descent_distribution(
    const Params& params, std::uint64_t budget = kDefaultEnumerationBudget);

// Word text format: entries separated by single spaces, each "V.C" with
// V the value and C the color, both decimal, e.g. "2.1 4.1 1.3 3.3".
std::string format_word(const ColoredWord& w);

// Inverse of format_word. Throws ParseError on malformed text and
// ValidationError when the parsed word violates the invariants.
ColoredWord parse_word(const std::string& text, const Params& params);

}  // namespace geneul
