#include "geneul/words.hpp"

#include <charconv>
#include <stdexcept>

#include "geneul/errors.hpp"

namespace geneul {

void validate_params(const Params& params) {
  if (params.colors < 1)
    throw std::invalid_argument("color count must be >= 1");
  if (params.multiplicity < 1)
    throw std::invalid_argument("multiplicity must be >= 1");
  if (params.symbols < 1)
    throw std::invalid_argument("symbol count must be >= 1");
  if (params.threshold < 0 || params.threshold >= params.colors)
    throw std::invalid_argument(
        "threshold must satisfy 0 <= b < a for combinatorial operations");
}

void validate_word(const ColoredWord& w, const Params& params) {
  validate_params(params);
  std::vector<int> copies(params.symbols + 1, 0);
  for (const ColoredEntry& e : w.entries) {
    if (e.value < 1 || e.value > params.symbols)
      throw ValidationError("value " + std::to_string(e.value) +
                            " out of range [1, " +
                            std::to_string(params.symbols) + "]");
    if (e.color < 1 || e.color > params.colors)
      throw ValidationError("color " + std::to_string(e.color) +
                            " out of range [1, " +
                            std::to_string(params.colors) + "]");
    ++copies[e.value];
  }
  for (int v = 1; v <= params.symbols; ++v) {
    if (copies[v] != params.multiplicity)
      throw ValidationError(
          "value " + std::to_string(v) + " appears " +
          std::to_string(copies[v]) + " time(s), expected " +
          std::to_string(params.multiplicity));
  }
}

int nonterminal_weak_descents(const ColoredWord& w) {
  int count = 0;
  for (std::size_t t = 1; t < w.entries.size(); ++t)
    if (w.entries[t - 1] >= w.entries[t]) ++count;
  return count;
}

int weak_descents(const ColoredWord& w, int threshold) {
  int count = nonterminal_weak_descents(w);
  if (!w.entries.empty() && w.entries.back().color > threshold) ++count;
  return count;
}

ColoredWord augment(const ColoredWord& w, int threshold) {
  ColoredWord result = w;
  result.entries.push_back({1, threshold + 1});
  return result;
}

namespace {

// Depth-first extension by the smallest admissible entry produces the
// words in lexicographic order under the colored order.
void extend(const Params& params, ColoredWord& word, std::vector<int>& left,
            int position, const std::function<void(const ColoredWord&)>& visit) {
  if (position == params.word_length()) {
    visit(word);
    return;
  }
  for (int color = 1; color <= params.colors; ++color) {
    for (int value = 1; value <= params.symbols; ++value) {
      if (left[value] == 0) continue;
      --left[value];
      word.entries[position] = {value, color};
      extend(params, word, left, position + 1, visit);
      ++left[value];
    }
  }
}

}  // namespace

void for_each_word(const Params& params,
                   const std::function<void(const ColoredWord&)>& visit,
                   std::uint64_t budget) {
  validate_params(params);
  BigNat required =
      total_words(params.symbols, params.multiplicity, params.colors);
  if (required > budget) throw BudgetError(required.str(), budget);

  ColoredWord word;
  word.entries.resize(params.word_length());
  std::vector<int> left(params.symbols + 1, params.multiplicity);
  extend(params, word, left, 0, visit);
}

std::vector<ColoredWord> enumerate_words(const Params& params,
                                         std::uint64_t budget) {
  std::vector<ColoredWord> words;
  for_each_word(
      params, [&](const ColoredWord& w) { words.push_back(w); }, budget);
  return words;
}

std::vector<BigNat> descent_distribution(const Params& params,
                                         std::uint64_t budget) {
  std::vector<BigNat> counts(params.word_length() + 1);
  for_each_word(
      params,
      [&](const ColoredWord& w) { ++counts[weak_descents(w, params.threshold)]; },
      budget);
  return counts;
}

std::vector<BigNat> nonterminal_descent_distribution(const Params& params,
                                                     std::uint64_t budget) {
  std::vector<BigNat> counts(params.word_length());
  for_each_word(
      params,
      [&](const ColoredWord& w) { ++counts[nonterminal_weak_descents(w)]; },
      budget);
  return counts;
}

std::string format_word(const ColoredWord& w) {
  std::string text;
  for (std::size_t t = 0; t < w.entries.size(); ++t) {
    if (t > 0) text += ' ';
    text += std::to_string(w.entries[t].value);
    text += '.';
    text += std::to_string(w.entries[t].color);
  }
  return text;
}

namespace {

// Reads a decimal int at `pos` (0-based), advancing it. `what` names the
// field for diagnostics.
int parse_number(const std::string& text, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start)
    throw ParseError(std::string("expected ") + what, start + 1);
  int result = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + start, text.data() + pos, result);
  if (ec != std::errc())
    throw ParseError(std::string(what) + " too large", start + 1);
  return result;
}

}  // namespace

ColoredWord parse_word(const std::string& text, const Params& params) {
  ColoredWord word;
  std::size_t pos = 0;
  while (true) {
    ColoredEntry entry;
    entry.value = parse_number(text, pos, "value");
    if (pos >= text.size() || text[pos] != '.')
      throw ParseError("expected '.'", pos + 1);
    ++pos;
    entry.color = parse_number(text, pos, "color");
    word.entries.push_back(entry);
    if (pos == text.size()) break;
    if (text[pos] != ' ') throw ParseError("expected ' '", pos + 1);
    ++pos;
  }
  validate_word(word, params);
  return word;
}

}  // namespace geneul
