#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geneul/errors.hpp"
#include "geneul/eulerian.hpp"
#include "geneul/identities.hpp"
#include "geneul/segmentation.hpp"
#include "geneul/words.hpp"

namespace {

using geneul::BigNat;
using geneul::IdentityReport;
using geneul::Params;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_positive(const char* name, int value) {
  if (value < 1)
    throw UsageError(std::string("--") + name + " must be >= 1, got " +
                     std::to_string(value));
}

// Validates (a, b, r, p) for commands that interpret b combinatorially.
// b >= a is a documented refusal: those tables are defined through the
// threshold reduction, not through descents.
Params combinatorial_params(int a, int b, int r, int p) {
  check_positive("a", a);
  check_positive("r", r);
  check_positive("p", p);
  if (b < 0) throw UsageError("--b must be >= 0, got " + std::to_string(b));
  if (b >= a) {
    const auto norm = geneul::normalize_threshold(a, b);
    throw UsageError(
        "b = " + std::to_string(b) + " is not below a = " + std::to_string(a) +
        ", so the weak-descent interpretation does not apply; use the "
        "reduction C(a*n+b, r) = C(a*(n+" +
        std::to_string(norm.shift) + ")+" + std::to_string(norm.reduced) +
        ", r) and rerun with --b " + std::to_string(norm.reduced) +
        " (see 'geneul verify normalize')");
  }
  return {a, b, r, p};
}

std::string csv_escape(const std::string& field) {
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int cmd_table(int a, int b, int r, int p, const std::string& format) {
  const Params params = combinatorial_params(a, b, r, p);
  const geneul::GenEulerianRow row = geneul::gen_eulerian_row(params);
  if (format == "json") {
    ordered_json j;
    j["params"] = {{"a", a}, {"b", b}, {"r", r}, {"p", p}};
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < row.values.size(); ++i)
      j["rows"].push_back({{"i", i}, {"A", row.values[i].str()}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "i,A\n";
    for (std::size_t i = 0; i < row.values.size(); ++i)
      std::cout << i << "," << row.values[i] << "\n";
  }
  return kExitOk;
}

int emit_report(const IdentityReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << "identity,status,grid_size\n";
    std::cout << report.identity << "," << (report.passed() ? "pass" : "fail")
              << "," << report.grid_size << "\n";
    if (!report.counterexamples.empty()) {
      std::cout << "params,lhs,rhs\n";
      for (const auto& cex : report.counterexamples)
        std::cout << csv_escape(cex.params.dump()) << ","
                  << csv_escape(cex.lhs) << "," << csv_escape(cex.rhs) << "\n";
    }
  }
  return report.passed() ? kExitOk : kExitCounterexample;
}

struct VerifyOptions {
  std::string identity;
  bool have_point = false;
  int a = 0, b = 0, r = 0, p = 0;
  int a_max = 3, r_max = 2, p_max = 3;
  long long n_max = 15;
  int rp_max = 8;
  int b_max = -1;  // default 2a, resolved per color count
  std::uint64_t budget = geneul::kDefaultEnumerationBudget;
  std::string format = "json";
};

std::vector<Params> verify_grid(const VerifyOptions& opt) {
  if (opt.have_point)
    return {combinatorial_params(opt.a, opt.b, opt.r, opt.p)};
  check_positive("a-max", opt.a_max);
  check_positive("r-max", opt.r_max);
  check_positive("p-max", opt.p_max);
  return geneul::make_grid(opt.a_max, opt.r_max, opt.p_max);
}

int cmd_verify(const VerifyOptions& opt) {
  if (opt.n_max < 0) throw UsageError("--n-max must be >= 0");
  IdentityReport report;
  if (opt.identity == "worpitzky" || opt.identity == "sum" ||
      opt.identity == "rowsum") {
    std::vector<IdentityReport> parts;
    for (const Params& params : verify_grid(opt)) {
      if (opt.identity == "worpitzky")
        parts.push_back(geneul::check_worpitzky(params, opt.n_max));
      else if (opt.identity == "sum")
        parts.push_back(geneul::check_sum_identity(params, opt.n_max));
      else
        parts.push_back(geneul::check_row_sum(params));
    }
    report = geneul::merge_reports(opt.identity, parts);
  } else if (opt.identity == "oracle") {
    report = geneul::check_oracle_equivalence(verify_grid(opt), opt.budget);
  } else if (opt.identity == "nonterminal") {
    std::vector<Params> grid = verify_grid(opt);
    if (opt.have_point && opt.b != 0)
      throw UsageError("verify nonterminal requires --b 0");
    report = geneul::check_nonterminal_counts(grid, opt.budget);
  } else if (opt.identity == "scm") {
    report = geneul::check_scm_bijection(verify_grid(opt), opt.budget);
  } else if (opt.identity == "columns") {
    if (opt.rp_max < 0) throw UsageError("--rp-max must be >= 0");
    report = geneul::check_column_counts(opt.n_max, opt.rp_max);
  } else if (opt.identity == "normalize") {
    std::vector<IdentityReport> parts;
    const int a_lo = opt.have_point ? opt.a : 1;
    const int a_hi = opt.have_point ? opt.a : opt.a_max;
    const int r = opt.have_point ? opt.r : 3;
    const int p = opt.have_point ? opt.p : 2;
    check_positive("a", a_lo);
    check_positive("r", r);
    check_positive("p", p);
    for (int a = a_lo; a <= a_hi; ++a) {
      const int b_max = opt.b_max >= 0 ? opt.b_max : 2 * a;
      parts.push_back(
          geneul::check_b_normalization(a, b_max, r, p, opt.n_max));
    }
    report = geneul::merge_reports("normalize", parts);
  } else {
    throw UsageError("unknown identity '" + opt.identity +
                     "' (expected worpitzky, sum, rowsum, oracle, "
                     "nonterminal, scm, columns, or normalize)");
  }
  return emit_report(report, opt.format);
}

int cmd_enumerate(int a, int b, int r, int p, bool by_descents,
                  std::uint64_t budget, const std::string& format) {
  const Params params = combinatorial_params(a, b, r, p);
  if (by_descents) {
    const std::vector<BigNat> counts =
        geneul::descent_distribution(params, budget);
    if (format == "json") {
      ordered_json j;
      j["params"] = {{"a", a}, {"b", b}, {"r", r}, {"p", p}};
      j["distribution"] = ordered_json::array();
      for (const BigNat& count : counts) j["distribution"].push_back(count.str());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "i,count\n";
      for (std::size_t i = 0; i < counts.size(); ++i)
        std::cout << i << "," << counts[i] << "\n";
    }
    return kExitOk;
  }
  if (format == "json") {
    ordered_json words = ordered_json::array();
    geneul::for_each_word(
        params,
        [&](const geneul::ColoredWord& w) {
          words.push_back({{"word", geneul::format_word(w)},
                           {"weak_descents", geneul::weak_descents(w, b)}});
        },
        budget);
    ordered_json j;
    j["params"] = {{"a", a}, {"b", b}, {"r", r}, {"p", p}};
    j["words"] = std::move(words);
    std::cout << j.dump(2) << "\n";
  } else {
    geneul::for_each_word(
        params,
        [&](const geneul::ColoredWord& w) {
          std::cout << geneul::format_word(w) << "  "
                    << geneul::weak_descents(w, b) << "\n";
        },
        budget);
  }
  return kExitOk;
}

int cmd_stats(const std::string& word_text, int a, int b, int r, int p) {
  const Params params = combinatorial_params(a, b, r, p);
  const geneul::ColoredWord word = geneul::parse_word(word_text, params);
  std::cout << "word: " << geneul::format_word(word) << "\n";
  std::cout << "nonterminal_weak_descents: "
            << geneul::nonterminal_weak_descents(word) << "\n";
  std::cout << "weak_descents: " << geneul::weak_descents(word, b) << "\n";
  std::cout << "scm_nonterminal: "
            << geneul::format_scm(geneul::word_to_scm(
                   word, geneul::ScmVariant::nonterminal, 0))
            << "\n";
  std::cout << "scm_thresholded: "
            << geneul::format_scm(geneul::word_to_scm(
                   word, geneul::ScmVariant::thresholded, b))
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tables, enumerations, and identity checks for generalized "
      "Eulerian numbers over colored multipermutations"};
  app.require_subcommand(1);

  int a = 1, b = 0, r = 1, p = 1;
  std::string format;
  std::uint64_t budget = geneul::kDefaultEnumerationBudget;

  auto* table = app.add_subcommand(
      "table", "Print the row A_{a,b,r}(p, i) for i = 0..rp");
  table->add_option("--a", a, "color count (a >= 1)")->required();
  table->add_option("--b", b, "terminal-descent threshold (0 <= b < a)")
      ->required();
  table->add_option("--r", r, "copies of each value (r >= 1)")->required();
  table->add_option("--p", p, "number of distinct values (p >= 1)")
      ->required();
  table->add_option("--format", format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "Check an identity over a parameter grid, report JSON");
  verify
      ->add_option("identity", verify_opt.identity,
                   "worpitzky | sum | rowsum | oracle | nonterminal | scm | "
                   "columns | normalize")
      ->required();
  auto* verify_a = verify->add_option("--a", verify_opt.a, "single color count");
  verify->add_option("--b", verify_opt.b, "single threshold");
  verify->add_option("--r", verify_opt.r, "single multiplicity");
  verify->add_option("--p", verify_opt.p, "single symbol count");
  verify->add_option("--a-max", verify_opt.a_max,
                     "grid: a in 1..a-max, b in 0..a-1 (default 3)");
  verify->add_option("--r-max", verify_opt.r_max, "grid: r in 1..r-max (default 2)");
  verify->add_option("--p-max", verify_opt.p_max, "grid: p in 1..p-max (default 3)");
  verify->add_option("--n-max", verify_opt.n_max,
                     "check n = 0..n-max (default 15)");
  verify->add_option("--rp-max", verify_opt.rp_max,
                     "columns: rp in 0..rp-max (default 8)");
  verify->add_option("--b-max", verify_opt.b_max,
                     "normalize: b in 0..b-max (default 2a)");
  verify->add_option("--budget", verify_opt.budget,
                     "enumeration budget in words (default 10000000)");
  verify->add_option("--format", verify_opt.format, "json or csv (default json)")
      ->check(CLI::IsMember({"csv", "json"}));

  bool by_descents = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "List every colored word with its weak-descent count");
  enumerate->add_option("--a", a, "color count")->required();
  enumerate->add_option("--b", b, "terminal-descent threshold")->required();
  enumerate->add_option("--r", r, "copies of each value")->required();
  enumerate->add_option("--p", p, "number of distinct values")->required();
  enumerate->add_flag("--by-descents", by_descents,
                      "print the weak-descent distribution instead");
  enumerate->add_option("--budget", budget,
                        "enumeration budget in words (default 10000000)");
  enumerate->add_option("--format", format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string word_text;
  auto* stats = app.add_subcommand(
      "stats", "Descent statistics and segmentations of one word");
  stats->add_option("word", word_text, "word in \"V.C V.C ...\" format")
      ->required();
  stats->add_option("--a", a, "color count")->required();
  stats->add_option("--b", b, "terminal-descent threshold")->required();
  stats->add_option("--r", r, "copies of each value")->required();
  stats->add_option("--p", p, "number of distinct values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    if (error.get_name() == "CallForHelp" ||
        error.get_name() == "CallForAllHelp")
      return app.exit(error);
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (table->parsed())
      return cmd_table(a, b, r, p, format.empty() ? "csv" : format);
    if (verify->parsed()) {
      verify_opt.have_point = verify_a->count() > 0;
      return cmd_verify(verify_opt);
    }
    if (enumerate->parsed())
      return cmd_enumerate(a, b, r, p, by_descents, budget,
                           format.empty() ? "csv" : format);
    if (stats->parsed()) return cmd_stats(word_text, a, b, r, p);
  } catch (const UsageError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const geneul::BudgetError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const geneul::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const geneul::ValidationError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
