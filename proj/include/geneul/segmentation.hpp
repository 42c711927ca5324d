#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geneul/bignum.hpp"
#include "geneul/words.hpp"

namespace geneul {

// Two flavours of segmented word. `nonterminal` splits at non-terminal
// weak descents only; `thresholded` also places a trailing wall when the
// final entry's color exceeds the threshold and constrains the final
// segment to colors <= threshold.
enum class ScmVariant { nonterminal, thresholded };

// A colored word split by walls into segments, each strictly increasing
// in the colored order. Segments may be empty; adjacent walls must not
// be collapsed. wall k sits between segments[k-1] and segments[k].
struct SegmentedWord {
  std::vector<std::vector<ColoredEntry>> segments;
  ScmVariant variant = ScmVariant::nonterminal;
  int threshold = 0;

  int segment_count() const { return static_cast<int>(segments.size()); }
  int wall_count() const { return segment_count() - 1; }

  friend bool operator==(const SegmentedWord&, const SegmentedWord&) = default;
};

// Number of entries to the left of the given wall (1-based wall index).
// Ranges over [0, rp]; equal positions occur iff the segment between two
// walls is empty. Throws std::out_of_range for a bad index.
int wall_position(const SegmentedWord& s, int wall_index);

// A wall is extraneous iff
//   (a) both adjacent segments are nonempty and removing the wall still
//       leaves a strictly increasing segment, or
//   (b) the segment to its left is empty, or
//   (c) thresholded only: it is the final wall, the segment to its right
//       is empty, and every entry to its left has color <= threshold.
bool is_extraneous(const SegmentedWord& s, int wall_index);

// Canonical segmentation: one wall at every weak-descent pair, and (for
// the thresholded variant) a trailing wall iff the final entry's color
// exceeds the threshold. The result has no extraneous walls. The
// nonterminal variant requires threshold == 0.
SegmentedWord word_to_scm(const ColoredWord& w, ScmVariant variant,
                          int threshold);

// Concatenates the segments; left inverse of word_to_scm.
ColoredWord scm_to_word(const SegmentedWord& s);

// Throws ValidationError unless every segment is strictly increasing,
// the concatenation is a valid word for params, and (thresholded) the
// final segment only uses colors <= threshold.
void validate_scm(const SegmentedWord& s, const Params& params);

// SCM text format: entry tokens and "|" wall tokens joined by single
// spaces, e.g. "2.1 4.1 | 1.1 | | 3.3" (empty segment between walls).
std::string format_scm(const SegmentedWord& s);

// Placement of value copies into (column, color) bins.
// bins[column][color-1] holds the values placed in that bin. Each column
// may list fewer than `colors` rows; missing rows are empty bins.
struct BinAssignment {
  std::vector<std::vector<std::vector<int>>> bins;

  int column_count() const { return static_cast<int>(bins.size()); }
};

// Builds the SCM whose k-th segment arranges the entries of column k in
// the unique strictly increasing order. Requires every bin to hold at
// most one copy of a value, exactly `multiplicity` copies of each value
// overall, and (thresholded) only colors <= threshold in the final
// column. Throws ValidationError otherwise.
SegmentedWord bins_to_scm(const BinAssignment& assignment,
                          const Params& params, ScmVariant variant);

// Closed-form count of SCMs with the given number of segments:
// C(a*l, r)^p for the nonterminal variant, C(a*(l-1)+b, r)^p for the
// thresholded one.
BigNat count_scms(const Params& params, int segment_count, ScmVariant variant);

// Entry l = number of words whose canonical segmentation has exactly l
// segments (indices 0 and l > rp+1 unused). By the segmentation
// bijection these are the extraneous-free SCM class sizes.
std::vector<BigNat> scm_segment_distribution(
    const Params& params, ScmVariant variant,
    std::uint64_t budget = kDefaultEnumerationBudget);

BigNat count_extraneous_free_scms(
    const Params& params, int segment_count, ScmVariant variant,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace geneul
