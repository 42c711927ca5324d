#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef GENEUL_CLI_PATH
#error "GENEUL_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(GENEUL_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t read = 0;
  while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), read);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("table prints the row as csv") {
  const CliResult result = run_cli("table --a 1 --b 0 --r 1 --p 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "i,A\n0,0\n1,1\n2,4\n3,1\n");
}

TEST_CASE("table csv and json carry identical values") {
  const CliResult csv = run_cli("table --a 2 --b 1 --r 1 --p 1");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "i,A\n0,1\n1,1\n");
  const CliResult json = run_cli("table --a 2 --b 1 --r 1 --p 1 --format json");
  CHECK(json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json.output);
  REQUIRE(parsed["rows"].size() == 2);
  CHECK(parsed["rows"][0]["A"] == "1");
  CHECK(parsed["rows"][1]["A"] == "1");
}

TEST_CASE("table refuses thresholds at or above the color count") {
  const CliResult result = run_cli("table --a 1 --b 4 --r 3 --p 2");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("weak-descent interpretation") != std::string::npos);
  CHECK(result.output.find("C(a*n+b, r)") != std::string::npos);
  CHECK(result.output.find("verify normalize") != std::string::npos);
}

TEST_CASE("table rejects non-positive parameters") {
  CHECK(run_cli("table --a 0 --b 0 --r 1 --p 1").exit_code == 2);
  CHECK(run_cli("table --a 1 --b 0 --r 0 --p 1").exit_code == 2);
  CHECK(run_cli("table --a 1 --b -1 --r 1 --p 1").exit_code == 2);
}

TEST_CASE("verify passes on true identities") {
  const CliResult point =
      run_cli("verify worpitzky --a 2 --b 1 --r 1 --p 2 --n-max 15");
  CHECK(point.exit_code == 0);
  const auto report = nlohmann::json::parse(point.output);
  CHECK(report["identity"] == "worpitzky");
  CHECK(report["status"] == "pass");
  CHECK(report["grid_size"] == 16);
  CHECK(report["counterexamples"].empty());

  const CliResult grid =
      run_cli("verify oracle --a-max 2 --r-max 2 --p-max 2");
  CHECK(grid.exit_code == 0);
  CHECK(nlohmann::json::parse(grid.output)["status"] == "pass");

  const CliResult csv =
      run_cli("verify rowsum --a 2 --b 0 --r 1 --p 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "identity,status,grid_size\nrowsum,pass,1\n");
}

TEST_CASE("verify exits 1 when a check lists counterexamples") {
  // Budget overruns inside a verification are reported per grid point,
  // so the run completes with a failing report rather than aborting.
  const CliResult result =
      run_cli("verify oracle --a 2 --b 0 --r 1 --p 2 --budget 3");
  CHECK(result.exit_code == 1);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["status"] == "fail");
  REQUIRE(!report["counterexamples"].empty());
  CHECK(report["counterexamples"][0]["lhs"]
            .get<std::string>()
            .find("budget exceeded") != std::string::npos);
}

TEST_CASE("verify rejects usage errors") {
  CHECK(run_cli("verify worpitzky --a 0 --b 0 --r 1 --p 1").exit_code == 2);
  CHECK(run_cli("verify nosuch --a 1 --b 0 --r 1 --p 1").exit_code == 2);
  CHECK(run_cli("verify worpitzky --a 1 --b 1 --r 1 --p 1").exit_code == 2);
}

TEST_CASE("enumerate lists words with weak-descent counts") {
  const CliResult result = run_cli("enumerate --a 1 --b 0 --r 1 --p 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "1.1 2.1  1\n2.1 1.1  2\n");
}

TEST_CASE("enumerate groups by descents on request") {
  const CliResult result =
      run_cli("enumerate --a 2 --b 0 --r 1 --p 1 --by-descents");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "i,count\n0,0\n1,2\n");
}

TEST_CASE("enumerate reports the required count when over budget") {
  const CliResult result =
      run_cli("enumerate --a 2 --b 0 --r 1 --p 3 --budget 10");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("requires 48 words") != std::string::npos);
}

TEST_CASE("stats reports descents and segmentations") {
  const CliResult result = run_cli(
      "stats \"2.1 4.1 1.3 3.3 1.1 2.1 4.1 2.2 5.2 5.3 1.1 5.1 4.2 3.3 3.3\" "
      "--a 3 --b 0 --r 3 --p 5");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("nonterminal_weak_descents: 3\n") !=
        std::string::npos);
  CHECK(result.output.find("weak_descents: 4\n") != std::string::npos);
  CHECK(result.output.find(
            "scm_nonterminal: 2.1 4.1 1.3 3.3 | 1.1 2.1 4.1 2.2 5.2 5.3 | "
            "1.1 5.1 4.2 3.3 | 3.3\n") != std::string::npos);
  CHECK(result.output.find(
            "scm_thresholded: 2.1 4.1 1.3 3.3 | 1.1 2.1 4.1 2.2 5.2 5.3 | "
            "1.1 5.1 4.2 3.3 | 3.3 |\n") != std::string::npos);
}

TEST_CASE("stats simple cases") {
  const CliResult high = run_cli("stats 1.2 --a 2 --b 1 --r 1 --p 1");
  CHECK(high.exit_code == 0);
  CHECK(high.output.find("weak_descents: 1\n") != std::string::npos);
  const CliResult pair = run_cli("stats \"1.1 1.1\" --a 1 --b 0 --r 2 --p 1");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output.find("nonterminal_weak_descents: 1\n") !=
        std::string::npos);
  CHECK(pair.output.find("weak_descents: 2\n") != std::string::npos);
}

TEST_CASE("stats rejects malformed or invalid words") {
  const CliResult malformed = run_cli("stats 1x2 --a 2 --b 0 --r 1 --p 1");
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.output.find("column") != std::string::npos);
  const CliResult invalid = run_cli("stats 1.1 --a 1 --b 0 --r 2 --p 1");
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.output.find("value 1 appears 1 time(s)") != std::string::npos);
}
