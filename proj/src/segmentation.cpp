#include "geneul/segmentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "geneul/errors.hpp"

namespace geneul {

namespace {

void check_wall_index(const SegmentedWord& s, int wall_index) {
  if (wall_index < 1 || wall_index > s.wall_count())
    throw std::out_of_range("wall index " + std::to_string(wall_index) +
                            " out of range [1, " +
                            std::to_string(s.wall_count()) + "]");
}

}  // namespace

int wall_position(const SegmentedWord& s, int wall_index) {
  check_wall_index(s, wall_index);
  int position = 0;
  for (int k = 0; k < wall_index; ++k)
    position += static_cast<int>(s.segments[k].size());
  return position;
}

bool is_extraneous(const SegmentedWord& s, int wall_index) {
  check_wall_index(s, wall_index);
  const auto& left = s.segments[wall_index - 1];
  const auto& right = s.segments[wall_index];
  if (left.empty()) return true;
  if (!right.empty() && left.back() < right.front()) return true;
  if (s.variant == ScmVariant::thresholded && wall_index == s.wall_count() &&
      right.empty()) {
    return std::all_of(left.begin(), left.end(), [&](const ColoredEntry& e) {
      return e.color <= s.threshold;
    });
  }
  return false;
}

SegmentedWord word_to_scm(const ColoredWord& w, ScmVariant variant,
                          int threshold) {
  if (variant == ScmVariant::nonterminal && threshold != 0)
    throw std::invalid_argument(
        "the nonterminal variant is defined for threshold 0");
  if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");

  SegmentedWord s;
  s.variant = variant;
  s.threshold = threshold;
  std::vector<ColoredEntry> current;
  for (std::size_t t = 0; t < w.entries.size(); ++t) {
    if (t > 0 && w.entries[t - 1] >= w.entries[t]) {
      s.segments.push_back(std::move(current));
      current.clear();
    }
    current.push_back(w.entries[t]);
  }
  s.segments.push_back(std::move(current));
  if (variant == ScmVariant::thresholded && !w.entries.empty() &&
      w.entries.back().color > threshold)
    s.segments.emplace_back();
  return s;
}

ColoredWord scm_to_word(const SegmentedWord& s) {
  ColoredWord w;
  for (const auto& segment : s.segments)
    w.entries.insert(w.entries.end(), segment.begin(), segment.end());
  return w;
}

void validate_scm(const SegmentedWord& s, const Params& params) {
  if (s.segments.empty())
    throw ValidationError("a segmented word needs at least one segment");
  for (const auto& segment : s.segments)
    for (std::size_t t = 1; t < segment.size(); ++t)
      if (segment[t - 1] >= segment[t])
        throw ValidationError("segment entries must be strictly increasing");
  if (s.variant == ScmVariant::thresholded) {
    for (const ColoredEntry& e : s.segments.back())
      if (e.color > s.threshold)
        throw ValidationError("color " + std::to_string(e.color) +
                              " exceeds threshold " +
                              std::to_string(s.threshold) +
                              " in the final segment");
  }
  validate_word(scm_to_word(s), params);
}

std::string format_scm(const SegmentedWord& s) {
  std::string text;
  bool first_token = true;
  auto append = [&](const std::string& token) {
    if (!first_token) text += ' ';
    text += token;
    first_token = false;
  };
  for (std::size_t k = 0; k < s.segments.size(); ++k) {
    if (k > 0) append("|");
    for (const ColoredEntry& e : s.segments[k])
      append(std::to_string(e.value) + '.' + std::to_string(e.color));
  }
  return text;
}

SegmentedWord bins_to_scm(const BinAssignment& assignment,
                          const Params& params, ScmVariant variant) {
  validate_params(params);
  if (assignment.bins.empty())
    throw ValidationError("bin assignment needs at least one column");

  SegmentedWord s;
  s.variant = variant;
  s.threshold = variant == ScmVariant::thresholded ? params.threshold : 0;

  std::vector<int> copies(params.symbols + 1, 0);
  const int columns = assignment.column_count();
  for (int col = 0; col < columns; ++col) {
    const auto& column = assignment.bins[col];
    if (static_cast<int>(column.size()) > params.colors)
      throw ValidationError("column " + std::to_string(col + 1) + " has " +
                            std::to_string(column.size()) +
                            " bins, more than the " +
                            std::to_string(params.colors) + " colors");
    std::vector<ColoredEntry> segment;
    for (int row = 0; row < static_cast<int>(column.size()); ++row) {
      const int color = row + 1;
      if (variant == ScmVariant::thresholded && col == columns - 1 &&
          color > params.threshold && !column[row].empty())
        throw ValidationError("color " + std::to_string(color) +
                              " out of range for the final column (allowed "
                              "colors are 1.." +
                              std::to_string(params.threshold) + ")");
      std::vector<int> seen;
      for (int value : column[row]) {
        if (value < 1 || value > params.symbols)
          throw ValidationError("value " + std::to_string(value) +
                                " out of range [1, " +
                                std::to_string(params.symbols) + "]");
        if (std::find(seen.begin(), seen.end(), value) != seen.end())
          throw ValidationError("duplicate copy of value " +
                                std::to_string(value) + " in one bin");
        seen.push_back(value);
        ++copies[value];
        segment.push_back({value, color});
      }
    }
    std::sort(segment.begin(), segment.end());
    s.segments.push_back(std::move(segment));
  }
  for (int v = 1; v <= params.symbols; ++v)
    if (copies[v] != params.multiplicity)
      throw ValidationError("value " + std::to_string(v) + " placed " +
                            std::to_string(copies[v]) + " time(s), expected " +
                            std::to_string(params.multiplicity));
  return s;
}

BigNat count_scms(const Params& params, int segment_count,
                  ScmVariant variant) {
  validate_params(params);
  if (segment_count < 1)
    throw std::invalid_argument("segment count must be >= 1");
  const long long bins =
      variant == ScmVariant::nonterminal
          ? static_cast<long long>(params.colors) * segment_count
          : static_cast<long long>(params.colors) * (segment_count - 1) +
                params.threshold;
  return pow_nat(binomial(bins, params.multiplicity),
                 static_cast<unsigned>(params.symbols));
}

std::vector<BigNat> scm_segment_distribution(const Params& params,
                                             ScmVariant variant,
                                             std::uint64_t budget) {
  // The nonterminal variant has threshold-0 semantics whatever
  // params.threshold says; walls never depend on it.
  const int threshold =
      variant == ScmVariant::thresholded ? params.threshold : 0;
  std::vector<BigNat> counts(params.word_length() + 2);
  for_each_word(
      params,
      [&](const ColoredWord& w) {
        ++counts[word_to_scm(w, variant, threshold).segment_count()];
      },
      budget);
  return counts;
}

BigNat count_extraneous_free_scms(const Params& params, int segment_count,
                                  ScmVariant variant, std::uint64_t budget) {
  if (segment_count < 1)
    throw std::invalid_argument("segment count must be >= 1");
  auto counts = scm_segment_distribution(params, variant, budget);
  if (segment_count >= static_cast<int>(counts.size())) return 0;
  return counts[segment_count];
}

}  // namespace geneul
