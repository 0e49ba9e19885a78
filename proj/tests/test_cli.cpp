#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

namespace {

// Binary path injected by the build; tests drive the real process.
const std::string kCli = MLQM_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = kCli + " " + args;
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
    res.output.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("delta spectrum emits the frozen header and exact root") {
  const auto res = run("delta-spectrum --mu 10 --tol 1e-14 2>/dev/null");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == std::size_t{2});
  CHECK(lines[0] == "mu,p0_exact,e_exact,e_asymptotic,rel_gap,min_length");
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == std::size_t{6});
  CHECK(testutil::rel_err(std::strtod(f[1].c_str(), nullptr),
                          0.9054981134503330660074) < 1e-13);
  CHECK(testutil::rel_err(std::strtod(f[2].c_str(), nullptr),
                          -0.4099634167310561260926) < 1e-13);
  CHECK(testutil::rel_err(std::strtod(f[3].c_str(), nullptr),
                          -0.3935282810141245560411) < 1e-13);
}

TEST_CASE("mu lists emit one row per scale in the given order") {
  const auto res = run("delta-spectrum --mu-list 2,10,80 2>/dev/null");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == std::size_t{4});
  CHECK(std::strtod(fields_of(lines[1])[0].c_str(), nullptr) == 2.0);
  CHECK(std::strtod(fields_of(lines[3])[0].c_str(), nullptr) == 80.0);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::string cmd =
      "coulomb-spectrum --mu-list 5,10,20 --n-max 2 2>/dev/null";
  const auto a = run(cmd);
  const auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto v1 = run("verify --grid-size 120 --format json 2>/dev/null");
  const auto v2 = run("verify --grid-size 120 --format json 2>/dev/null");
  CHECK(v1.output == v2.output);
}

TEST_CASE("si units reproduce the hydrogen minimal-length bound") {
  const auto res = run("coulomb-spectrum --units si --n-max 1 2>/dev/null");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() >= std::size_t{2});
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == std::size_t{11});
  const double bound = std::strtod(f[9].c_str(), nullptr);
  // hbar^2 / (sqrt(2) alpha hbar c m_e) in meters.
  CHECK(testutil::rel_err(bound, 3.741847940506802071689e-11) < 1e-12);
  // The default SI deformation scale mu = hbar / bound sits a factor sqrt(2)
  // past the critical strength for n = 1, so the row itself carries no level;
  // the bound column is a closed form and survives regardless.
  CHECK(f[10] == "no-bound-state");
  CHECK(f[3].empty());
}

TEST_CASE("too-strong deformation reports a no-bound-state row") {
  const auto res = run("coulomb-spectrum --mu 1 --n-max 1 2>/dev/null");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == std::size_t{2});
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == std::size_t{11});
  CHECK(f[10] == "no-bound-state");
  CHECK(f[3].empty());   // p0_minus
  CHECK(f[5].empty());   // e_minus
  CHECK(testutil::rel_err(std::strtod(f[2].c_str(), nullptr), -3.0) < 1e-14);
}

TEST_CASE("effective potential curves carry 501 samples and frozen depth") {
  const auto res = run("effective-potential --potential delta --mu 2 2>/dev/null");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == std::size_t{502});
  CHECK(lines[0] == "x,v_eff,mu");
  // The 251st sample sits at x = 0: depth -kappa mu/(2 sqrt(pi)) = -1/sqrt(pi).
  const auto mid = fields_of(lines[251]);
  CHECK(std::strtod(mid[0].c_str(), nullptr) == 0.0);
  CHECK(testutil::rel_err(std::strtod(mid[1].c_str(), nullptr),
                          -0.5641895835477562869481) < 1e-13);
}

TEST_CASE("coulomb effective potential vanishes exactly at the origin") {
  const auto res =
      run("effective-potential --potential coulomb --mu 5 2>/dev/null");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == std::size_t{502});
  const auto mid = fields_of(lines[251]);
  CHECK(std::strtod(mid[0].c_str(), nullptr) == 0.0);
  CHECK(std::strtod(mid[1].c_str(), nullptr) == 0.0);
}

TEST_CASE("json output carries the schema version") {
  const auto res = run("delta-spectrum --mu 10 --format json 2>/dev/null");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(res.output.find("\"command\": \"delta-spectrum\"") !=
        std::string::npos);
}

TEST_CASE("out flag writes the same bytes to a file") {
  const std::string path = "cli_out_probe.csv";
  std::remove(path.c_str());
  const auto direct = run("delta-spectrum --mu-list 2,10 2>/dev/null");
  const auto res =
      run("delta-spectrum --mu-list 2,10 --out " + path + " 2>/dev/null");
  CHECK(res.exit_code == 0);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());
}

TEST_CASE("config errors exit with code 1 and name the offending flag") {
  const auto neg = run("delta-spectrum --mu -5 2>&1");
  CHECK(neg.exit_code == 1);
  CHECK(neg.output.find("mu") != std::string::npos);
  const auto grid = run("verify --grid-size 20 2>&1");
  CHECK(grid.exit_code == 1);
  CHECK(grid.output.find("grid-size") != std::string::npos);
  const auto cmd = run("transmute 2>&1");
  CHECK(cmd.exit_code == 1);
}

TEST_CASE("verify passes at the default grid and warns on coarse grids") {
  const auto fine = run("verify --grid-size 120 2>/dev/null");
  CHECK(fine.exit_code == 0);
  const auto coarse = run("verify --grid-size 50 2>/dev/null");
  CHECK(coarse.exit_code == 0);
  int warns = 0;
  for (const auto& line : lines_of(coarse.output))
    if (line.find(",warn,") != std::string::npos) ++warns;
  CHECK(warns == 3);
  CHECK(coarse.output.find("coarse grid") != std::string::npos);
}
