#include "geneul/identities.hpp"

#include "geneul/errors.hpp"
#include "geneul/eulerian.hpp"
#include "geneul/segmentation.hpp"

namespace geneul {

using nlohmann::ordered_json;

ordered_json IdentityReport::to_json() const {
  ordered_json j;
  j["identity"] = identity;
  j["status"] = passed() ? "pass" : "fail";
  j["grid_size"] = grid_size;
  j["counterexamples"] = ordered_json::array();
  for (const Counterexample& cex : counterexamples) {
    ordered_json entry;
    entry["params"] = cex.params;
    entry["lhs"] = cex.lhs;
    entry["rhs"] = cex.rhs;
    j["counterexamples"].push_back(std::move(entry));
  }
  return j;
}

std::vector<Params> make_grid(int a_max, int r_max, int p_max) {
  if (a_max < 1 || r_max < 1 || p_max < 1)
    throw std::invalid_argument("grid maxima must be >= 1");
  std::vector<Params> grid;
  for (int a = 1; a <= a_max; ++a)
    for (int b = 0; b < a; ++b)
      for (int r = 1; r <= r_max; ++r)
        for (int p = 1; p <= p_max; ++p) grid.push_back({a, b, r, p});
  return grid;
}

IdentityReport merge_reports(const std::string& identity,
                             const std::vector<IdentityReport>& parts) {
  IdentityReport merged;
  merged.identity = identity;
  for (const IdentityReport& part : parts) {
    merged.grid_size += part.grid_size;
    merged.counterexamples.insert(merged.counterexamples.end(),
                                  part.counterexamples.begin(),
                                  part.counterexamples.end());
  }
  return merged;
}

namespace {

ordered_json params_json(const Params& params) {
  ordered_json j;
  j["a"] = params.colors;
  j["b"] = params.threshold;
  j["r"] = params.multiplicity;
  j["p"] = params.symbols;
  return j;
}

BigNat binomial_power(long long top, int multiplicity, int symbols) {
  return pow_nat(binomial(top, multiplicity),
                 static_cast<unsigned>(symbols));
}

void add_mismatch(IdentityReport& report, ordered_json params,
                  const BigNat& lhs, const BigNat& rhs) {
  if (lhs != rhs)
    report.counterexamples.push_back(
        {std::move(params), lhs.str(), rhs.str()});
}

}  // namespace

IdentityReport check_worpitzky(const Params& params, long long n_max) {
  validate_params(params);
  IdentityReport report;
  report.identity = "worpitzky";
  const long long rp = params.word_length();
  const GenEulerianRow row = gen_eulerian_row(params);
  for (long long n = 0; n <= n_max; ++n) {
    ++report.grid_size;
    BigNat lhs = binomial_power(params.colors * n + params.threshold,
                                params.multiplicity, params.symbols);
    BigNat rhs = 0;
    for (long long i = 0; i <= rp; ++i)
      rhs += row.values[i] * binomial(n + rp - i, rp);
    ordered_json p = params_json(params);
    p["n"] = n;
    add_mismatch(report, std::move(p), lhs, rhs);
  }
  return report;
}

IdentityReport check_sum_identity(const Params& params, long long n_max) {
  validate_params(params);
  IdentityReport report;
  report.identity = "sum";
  const long long rp = params.word_length();
  const GenEulerianRow row = gen_eulerian_row(params);
  BigNat lhs = 0;
  for (long long n = 0; n <= n_max; ++n) {
    ++report.grid_size;
    lhs += binomial_power(params.colors * n + params.threshold,
                          params.multiplicity, params.symbols);
    BigNat rhs = 0;
    for (long long i = 0; i <= rp; ++i)
      rhs += row.values[i] * binomial(n + 1 + rp - i, rp + 1);
    ordered_json p = params_json(params);
    p["n"] = n;
    add_mismatch(report, std::move(p), lhs, rhs);
  }
  return report;
}

IdentityReport check_row_sum(const Params& params) {
  validate_params(params);
  IdentityReport report;
  report.identity = "rowsum";
  report.grid_size = 1;
  BigNat lhs = 0;
  for (int i = 0; i <= params.word_length(); ++i)
    lhs += gen_eulerian_closed(params, i);
  BigNat rhs =
      total_words(params.symbols, params.multiplicity, params.colors);
  add_mismatch(report, params_json(params), lhs, rhs);
  return report;
}

IdentityReport check_oracle_equivalence(const std::vector<Params>& grid,
                                        std::uint64_t budget) {
  IdentityReport report;
  report.identity = "oracle";
  for (const Params& params : grid) {
    ++report.grid_size;
    try {
      const std::vector<BigNat> counted = descent_distribution(params, budget);
      const GenEulerianRow row = gen_eulerian_row(params);
      for (int i = 0; i <= params.word_length(); ++i) {
        ordered_json p = params_json(params);
        p["i"] = i;
        add_mismatch(report, std::move(p), row.values[i], counted[i]);
      }
    } catch (const BudgetError& error) {
      report.counterexamples.push_back(
          {params_json(params), std::string("budget exceeded: ") + error.what(),
           ""});
    }
  }
  return report;
}

IdentityReport check_nonterminal_counts(const std::vector<Params>& grid,
                                         std::uint64_t budget) {
  IdentityReport report;
  report.identity = "nonterminal";
  for (const Params& params : grid) {
    if (params.threshold != 0) continue;
    ++report.grid_size;
    try {
      const std::vector<BigNat> counted =
          nonterminal_descent_distribution(params, budget);
      for (int i = 0; i < params.word_length(); ++i) {
        ordered_json p = params_json(params);
        p["i"] = i;
        add_mismatch(report, std::move(p),
                     nonterminal_count_closed(params.colors,
                                              params.multiplicity,
                                              params.symbols, i),
                     counted[i]);
      }
    } catch (const BudgetError& error) {
      report.counterexamples.push_back(
          {params_json(params), std::string("budget exceeded: ") + error.what(),
           ""});
    }
  }
  return report;
}

IdentityReport check_column_count(long long n, int rp, int i) {
  if (n < 0 || rp < 0 || i < 0 || i > rp)
    throw std::invalid_argument("need n >= 0 and 0 <= i <= rp");
  IdentityReport report;
  report.identity = "columns";
  report.grid_size = 1;

  BigNat summed = 0;
  BigNat pinned = 0;
  for (long long l = i + 1; l <= n + 1; ++l) {
    const BigNat spans = binomial(rp - i, l - i - 1);
    summed += binomial(n + 1, l) * spans;
    pinned += binomial(n, l - 1) * spans;
  }

  ordered_json p;
  p["n"] = n;
  p["rp"] = rp;
  p["i"] = i;
  ordered_json p_summed = p;
  p_summed["form"] = "sum";
  add_mismatch(report, std::move(p_summed), summed,
               binomial(n + 1 + rp - i, rp + 1));
  ordered_json p_pinned = p;
  p_pinned["form"] = "worpitzky";
  add_mismatch(report, std::move(p_pinned), pinned, binomial(n + rp - i, rp));
  return report;
}

IdentityReport check_column_counts(long long n_max, int rp_max) {
  std::vector<IdentityReport> parts;
  for (long long n = 0; n <= n_max; ++n)
    for (int rp = 0; rp <= rp_max; ++rp)
      for (int i = 0; i <= rp; ++i)
        parts.push_back(check_column_count(n, rp, i));
  return merge_reports("columns", parts);
}

namespace {

void check_bijection_point(IdentityReport& report, const Params& params,
                           ScmVariant variant, std::uint64_t budget) {
  const char* variant_name =
      variant == ScmVariant::nonterminal ? "nonterminal" : "thresholded";
  const int threshold =
      variant == ScmVariant::thresholded ? params.threshold : 0;
  const int rp = params.word_length();

  std::vector<BigNat> by_segments(rp + 2);
  for_each_word(
      params,
      [&](const ColoredWord& w) {
        const SegmentedWord s = word_to_scm(w, variant, threshold);
        ++by_segments[s.segment_count()];
        const ColoredWord back = scm_to_word(s);
        if (back != w) {
          ordered_json p = params_json(params);
          p["variant"] = variant_name;
          report.counterexamples.push_back(
              {std::move(p), format_word(w), format_word(back)});
          return;
        }
        for (int wall = 1; wall <= s.wall_count(); ++wall) {
          if (is_extraneous(s, wall)) {
            ordered_json p = params_json(params);
            p["variant"] = variant_name;
            p["wall"] = wall;
            report.counterexamples.push_back(
                {std::move(p), format_word(w),
                 "extraneous wall in " + format_scm(s)});
            return;
          }
        }
      },
      budget);

  // Descent classes against segment-count classes.
  if (variant == ScmVariant::thresholded) {
    const std::vector<BigNat> by_descents =
        descent_distribution(params, budget);
    for (int i = 0; i <= rp; ++i) {
      ordered_json p = params_json(params);
      p["variant"] = variant_name;
      p["i"] = i;
      add_mismatch(report, std::move(p), by_descents[i], by_segments[i + 1]);
    }
  } else {
    const std::vector<BigNat> by_descents =
        nonterminal_descent_distribution(params, budget);
    for (int i = 0; i < rp; ++i) {
      ordered_json p = params_json(params);
      p["variant"] = variant_name;
      p["i"] = i;
      add_mismatch(report, std::move(p), by_descents[i], by_segments[i + 1]);
    }
  }
}

}  // namespace

IdentityReport check_scm_bijection(const std::vector<Params>& grid,
                                   std::uint64_t budget) {
  IdentityReport report;
  report.identity = "scm";
  for (const Params& params : grid) {
    ++report.grid_size;
    try {
      check_bijection_point(report, params, ScmVariant::nonterminal, budget);
      check_bijection_point(report, params, ScmVariant::thresholded, budget);
    } catch (const BudgetError& error) {
      report.counterexamples.push_back(
          {params_json(params), std::string("budget exceeded: ") + error.what(),
           ""});
    }
  }
  return report;
}

IdentityReport check_b_normalization(int colors, int threshold_max,
                                     int multiplicity, int symbols,
                                     long long n_max) {
  if (colors < 1 || multiplicity < 1 || symbols < 1)
    throw std::invalid_argument("a, r, p must be >= 1");
  if (threshold_max < 0 || n_max < 0)
    throw std::invalid_argument("b-max and n-max must be >= 0");
  IdentityReport report;
  report.identity = "normalize";
  for (int b = 0; b <= threshold_max; ++b) {
    const ThresholdNormalization norm = normalize_threshold(colors, b);
    for (long long n = 0; n <= n_max; ++n) {
      ++report.grid_size;
      BigNat lhs = binomial_power(static_cast<long long>(colors) * n + b,
                                  multiplicity, symbols);
      BigNat rhs = binomial_power(
          static_cast<long long>(colors) * (n + norm.shift) + norm.reduced,
          multiplicity, symbols);
      ordered_json p;
      p["a"] = colors;
      p["b"] = b;
      p["r"] = multiplicity;
      p["p"] = symbols;
      p["n"] = n;
      add_mismatch(report, std::move(p), lhs, rhs);
    }
  }
  return report;
}

}  // namespace geneul
