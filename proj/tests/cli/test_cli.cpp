#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/number_theory.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + MOMENTS_BINARY + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) r.out += buf;
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("moments-cli-" + std::to_string(::getpid()) + "-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("group presets") {
  auto q8 = parse_csv(run("group --preset q8").out);
  REQUIRE(q8.size() == 2);
  CHECK(q8[0][3] == "gi_extension_count");
  CHECK(q8[1][3] == "1");
  auto a5 = parse_csv(run("group --preset a5").out);
  CHECK(std::stoi(a5[1][3]) >= 2);
  auto c12 = parse_csv(run("group --preset c12").out);
  CHECK(c12[1][3] == "1");
  CHECK(run("group --preset a6 --max-order 100").status == 2);
  CHECK(run("group --preset x9").status == 2);
}

TEST_CASE("affine-scan rows and the disagreement exit status") {
  const auto r = run("affine-scan --max-qd 60");
  CHECK(r.status == 1);  // G(9,2) has two GI-extensions against the stated one
  const auto rows = parse_csv(r.out);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == std::vector<std::string>{"q", "d", "theorem_prediction", "brute_force_count", "agree"});
  auto has = [&](std::vector<std::string> row) {
    for (const auto& x : rows)
      if (x == row) return true;
    return false;
  };
  CHECK(has({"4", "3", "1", "1", "true"}));
  CHECK(has({"7", "3", "0", "0", "true"}));
  CHECK(has({"8", "7", "0", "0", "true"}));
  CHECK(has({"9", "2", "1", "2", "false"}));
  const auto small = run("affine-scan --max-qd 8");
  CHECK(small.status == 0);
  CHECK(run("affine-scan --max-qd 301").status == 2);
}

TEST_CASE("sieve at x_max = 100 counts every fundamental discriminant") {
  for (const char* sign : {"neg", "pos"}) {
    const auto rows = parse_csv(run(std::string("sieve --group q8 --x-max 100 --workers 1 --sign ") + sign).out);
    REQUIRE(rows.size() == 2);
    std::int64_t expected = 0;
    for (std::int64_t d = 2; d <= 100; ++d) {
      const std::int64_t v = sign[0] == 'n' ? -d : d;
      if (oracle::fundamental_by_definition(v)) ++expected;
    }
    CHECK(rows[1][0] == "100");
    CHECK(std::stoll(rows[1][2]) == expected);
  }
}

TEST_CASE("interrupted and resumed sieve gives identical bytes") {
  TempDir dir;
  const auto full = dir.path / "full.csv";
  const auto part = dir.path / "part.csv";
  const std::string common = "sieve --group d4 --sign neg --x-max 300000 --checkpoints 1e3,1e4,1e5 --block-size 40000";
  REQUIRE(run(common + " --workers 1 --output " + full.string()).status == 0);
  CHECK(run(common + " --workers 2 --max-blocks 2 --output " + part.string()).status == 2);
  CHECK(fs::exists(part.string() + ".ckpt"));
  CHECK_FALSE(fs::exists(part));
  CHECK(run(common + " --workers 3 --max-blocks 3 --resume --output " + part.string()).status == 2);
  CHECK(run(common + " --workers 2 --resume --output " + part.string()).status == 0);
  CHECK(slurp(full) == slurp(part));
  CHECK_FALSE(fs::exists(part.string() + ".ckpt"));
  // a checkpoint from another configuration is refused
  CHECK(run(common + " --max-blocks 1 --output " + part.string()).status == 2);
  CHECK(run("sieve --group q8 --sign neg --x-max 300000 --resume --output " + part.string()).status == 2);
}

TEST_CASE("config file values with flags taking precedence") {
  TempDir dir;
  const auto cfg = dir.path / "run.cfg";
  std::ofstream(cfg) << "group=d4\nsign=pos\nx-max=20000\ncheckpoints=1000,10000\n";
  const auto from_file = parse_csv(run("sieve --config " + cfg.string()).out);
  REQUIRE(from_file.size() == 4);
  CHECK(from_file[3][0] == "20000");
  const auto overridden = parse_csv(run("sieve --config " + cfg.string() + " --x-max 30000").out);
  REQUIRE(overridden.size() == 4);
  CHECK(overridden[3][0] == "30000");
  CHECK(overridden[2] == from_file[2]);
  CHECK(run("sieve --config " + (dir.path / "missing.cfg").string()).status == 2);
}

TEST_CASE("output directory from the environment") {
  TempDir dir;
  CHECK(run("gh --n 1000", "CLM_OUTPUT_DIR=" + dir.path.string()).status == 0);
  const auto rows = parse_csv(slurp(dir.path / "gh.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"N", "gh_sum"});
  CHECK(rows[3][0] == "1000");
}

TEST_CASE("analytic subcommands") {
  const auto l = parse_csv(run("lfunc --disc -4 --prec 1e-6").out);
  REQUIRE(l.size() == 2);
  CHECK(std::fabs(std::stod(l[1][1]) - 0.785398) <= 1e-6);
  CHECK(l[1][3] == "character-sum");
  const auto r = parse_csv(run("residue --d1 -3 --d2 13 --sign neg --x 1e6").out);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == std::vector<std::string>{"d1", "d2", "sign", "X", "empirical", "predicted", "ratio"});
  const double ratio = std::stod(r[1][6]);
  CHECK(ratio >= 0.85);
  CHECK(ratio <= 1.15);
  const auto d = parse_csv(run("density --d 5 --xmax 1e5").out);
  REQUIRE(d.size() == 2);
  CHECK(d[0][0] == "d");
  const auto s = parse_csv(run("restricted --d1 -3 --d2 13 --sign neg --x 1e5").out);
  REQUIRE(s.size() == 2);
  CHECK(s[1][4] == "83");
  CHECK(s[1][5] == "2");
  CHECK(run("lfunc --disc 20").status == 2);
  CHECK(run("residue --d1 -3 --d2 15 --sign neg").status == 2);
  CHECK(run("gh --n 2e6").status == 2);
  CHECK(run("sieve --x-max 1e8").status == 2);
  CHECK(run("sieve --x-max 1.5").status == 2);
}

}  // TEST_SUITE
