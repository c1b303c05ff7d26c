// Integration tests for the core-limit executable: exit codes, output
// formats, and determinism, driven through a shell.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(CORELIMIT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

}  // namespace

TEST_CASE("enumerate") {
  CHECK(run_cli("enumerate --s 4 --count-only").output == "5\n");
  CHECK(run_cli("enumerate --s 9 --k 3 --count-only").output == "20\n");

  const RunResult single = run_cli("enumerate --s 1");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "∅ 0\n");

  const RunResult json = run_cli("enumerate --s 4 --format json");
  const auto j = nlohmann::json::parse(json.output);
  CHECK(j["schema"] == "core-limit/v1");
  CHECK(j["count"] == 5);
  CHECK(j["manifest"]["command"] == "enumerate");
}

TEST_CASE("dist") {
  const RunResult r = run_cli("dist --s 4");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["s"] == 4);
  CHECK(j["total"] == "5");
  CHECK(j["counts"] ==
        nlohmann::json({{"0", "1"}, {"1", "1"}, {"2", "1"}, {"3", "2"}}));

  const auto single = nlohmann::json::parse(run_cli("dist --s 1").output);
  CHECK(single["counts"] == nlohmann::json({{"0", "1"}}));

  const auto moments =
      nlohmann::json::parse(run_cli("dist --s 5 --k 2 --moments").output);
  CHECK(moments["moments"]["mean"] == "4");
  CHECK(moments["moments"]["variance"] == "2/3");

  const RunResult csv = run_cli("dist --s 4 --format csv");
  const auto rows = lines_of(csv.output);
  REQUIRE(rows.size() >= 6);
  CHECK(rows[1] == "size,count");
  CHECK(rows[2] == "0,1");
  CHECK(rows[5] == "3,2");
}

TEST_CASE("verify subchecks pass on healthy ranges") {
  CHECK(run_cli("verify mixing --x -3..3").exit_code == 0);
  CHECK(run_cli("verify roots --s 2..20").exit_code == 0);
  CHECK(run_cli("verify pitman --s 2..60").exit_code == 0);
  CHECK(run_cli("verify cclt-bound --s 8..60").exit_code == 0);
  CHECK(run_cli("verify ykdiag --s 50..90 --s-step 20").exit_code == 0);

  const RunResult clt = run_cli("verify clt --s 10..30");
  CHECK(clt.exit_code == 0);
  const auto rows = lines_of(clt.output);
  REQUIRE(rows.size() == 23);  // manifest + header + 21 rows
  CHECK(rows[1] == "s,kolmogorov,scaled,mean,stddev");
  CHECK(rows[2].substr(0, 3) == "10,");
}

TEST_CASE("verify reports a failing property with exit 1") {
  // the tail mass is not monotone from s=50 to s=51, so a two-point fit has
  // positive slope
  const RunResult r = run_cli("verify tail --s 50..51");
  CHECK(r.exit_code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("enumerate").exit_code == 2);        // missing --s
  CHECK(run_cli("dist --s 0").exit_code == 2);       // domain violation
  CHECK(run_cli("verify bogus --s 2..4").exit_code == 2);
  CHECK(run_cli("dist --s 7 --k 5").exit_code == 2); // k > s/2
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sample") {
  const RunResult tiny = run_cli("sample --s 1 --n 10 --seed 3");
  CHECK(tiny.exit_code == 0);
  const auto rows = lines_of(tiny.output);
  REQUIRE(rows.size() == 11);  // manifest comment + 10 sizes
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i] == "0");

  const RunResult a = run_cli("sample --s 12 --n 50 --seed 9");
  const RunResult b = run_cli("sample --s 12 --n 50 --seed 9");
  CHECK(a.output == b.output);  // deterministic given the seed

  const RunResult ks = run_cli("sample --s 30 --n 100000 --seed 7 --ks --out /dev/null");
  CHECK(ks.exit_code == 0);
  const auto j = nlohmann::json::parse(ks.output);
  CHECK(j["pass"] == true);
  CHECK(j["n"] == 100000);
}
