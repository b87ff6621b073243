// End-to-end checks of the command-line tool: spawns the real binary and
// inspects exit codes, stdout, and the files it writes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef E2Z_CLI_PATH
#error "E2Z_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = "cli_tmp_stdout.txt";
  std::string cmd = std::string(E2Z_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (status == -1) ? -1 : WEXITSTATUS(status);
  std::ifstream in(out_path, std::ios::binary);
  r.out = {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::remove(out_path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// value after the last "y = " on the matching line
double parse_y(const std::string& text, const std::string& key) {
  for (const std::string& line : lines_of(text)) {
    if (line.find(key) == std::string::npos) continue;
    size_t pos = line.find("y = ");
    REQUIRE(pos != std::string::npos);
    return std::strtod(line.c_str() + pos + 4, nullptr);
  }
  FAIL("line with key not found: " << key);
  return 0.0;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("cli_tmp_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string slurp() const {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
};

}  // namespace

TEST_CASE("axis-zeros prints both boundary zeros") {
  RunResult r = run_cli("axis-zeros");
  REQUIRE(r.exit_code == 0);
  CHECK(std::abs(parse_y(r.out, "imaginary axis") - 0.5235217000179992) < 1e-11);
  CHECK(std::abs(parse_y(r.out, "x = -1/2") - 0.13091903039676245) < 1e-11);
}

TEST_CASE("zeros exports csv") {
  TempFile csv("zeros.csv");
  RunResult r = run_cli("zeros --max-denominator 5 --format csv --out " + csv.path);
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(csv.slurp());
  REQUIRE(lines.size() == 11);  // header + the 10 labels up to depth 5
  CHECK(lines[0] ==
        "c,d,a,b,x_pred1,y_pred1,x_pred2,y_pred2,x_refined,y_refined,"
        "residual,theta_scaled,newton_iters");
}

TEST_CASE("zeros exports json") {
  TempFile out("zeros.json");
  RunResult r = run_cli("zeros --max-denominator 3 --format json --out " + out.path);
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(out.slurp());
  CHECK(doc["records"].size() == 4);
  CHECK(doc.contains("constants"));
  CHECK(doc.contains("generated_by"));
}

TEST_CASE("zeros with a height cut") {
  TempFile csv("band.csv");
  RunResult r = run_cli("zeros --min-height 0.01 --format csv --out " + csv.path);
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(csv.slurp());
  REQUIRE(lines.size() > 1);
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string cell;
    for (int k = 0; k < 10 && std::getline(row, cell, ','); ++k) {}
    CHECK(std::strtod(cell.c_str(), nullptr) >= 0.01);
  }
}

TEST_CASE("zeros selector validation") {
  TempFile out("zeros_bad.csv");
  CHECK(run_cli("zeros --out " + out.path).exit_code == 1);
  CHECK(run_cli("zeros --max-denominator 3 --min-height 0.01 --out " + out.path).exit_code ==
        1);
  CHECK(run_cli("zeros --max-denominator 3 --out /nonexistent/dir/z.csv").exit_code == 1);
}

TEST_CASE("verify subcommand") {
  TempFile report("report.json");
  RunResult r =
      run_cli("verify --theorem 1 --max-denominator 10 --out " + report.path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  nlohmann::json doc = nlohmann::json::parse(report.slurp());
  REQUIRE(doc["checks"].size() == 2);
  for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("plot subcommand renders figures") {
  TempFile fig("fig2.svg");
  RunResult r = run_cli("plot --figure real_locus --out " + fig.path);
  REQUIRE(r.exit_code == 0);
  std::string svg = fig.slurp();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  TempFile scatter("fig1.svg");
  CHECK(run_cli("plot --figure zeros_scatter --min-height 0.004 --out " + scatter.path)
            .exit_code == 0);
  CHECK(scatter.slurp().find("class=\"zero\"") != std::string::npos);

  CHECK(run_cli("plot --figure bogus --out " + fig.path).exit_code == 1);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("plot").exit_code == 1);  // missing required flags
}
