#include "doctest.h"

#ifdef TWOROUTE_CLI_PATH

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "tworoute/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliDir {
  fs::path path;
  CliDir() {
    path = fs::temp_directory_path() / ("tworoute_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~CliDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TWOROUTE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli: generate, solve, verify round trip") {
  CliDir dir;
  const std::string out = dir.path.string();
  REQUIRE(run_cli("gen --family kalmanson-2tsp --n 10 --fixed 4 --count 2 --seed 5 --out " + out) == 0);
  REQUIRE(fs::exists(dir.path / "inst_0000.matrix"));
  REQUIRE(fs::exists(dir.path / "inst_0001.2tsp"));

  const std::string base = (dir.path / "inst_0000").string();
  CHECK(run_cli("solve 2tsp-exact " + base) == 0);
  CHECK(fs::exists(base + ".sol"));
  CHECK(run_cli("verify " + base + " " + base + ".sol") == 0);

  // The exact solution of a generated bundle hits the stored optimum.
  const auto bundle = tworoute::read_2tsp_bundle(base);
  const auto sol = tworoute::read_two_tour_solution(base + ".sol");
  REQUIRE(bundle.optimum.has_value());
  CHECK(sol.total_length == doctest::Approx(*bundle.optimum).epsilon(1e-9));

  SUBCASE("oracle and ks agree with the optimum on this instance") {
    CHECK(run_cli("solve 2tsp-oracle " + base + " --out " + base + ".osol") == 0);
    const auto osol = tworoute::read_two_tour_solution(base + ".osol");
    CHECK(osol.total_length == doctest::Approx(*bundle.optimum).epsilon(1e-9));
    CHECK(run_cli("solve ks " + base + " --out " + base + ".ksol") == 0);
    const auto ksol = tworoute::read_two_tour_solution(base + ".ksol");
    CHECK(ksol.total_length == doctest::Approx(*bundle.optimum).epsilon(1e-9));
  }

  SUBCASE("a corrupted solution fails verification with exit 2") {
    auto broken = sol;
    broken.tour1.erase(broken.tour1.begin() + 1);
    tworoute::write_two_tour_solution(base + ".bad", broken);
    CHECK(run_cli("verify " + base + " " + base + ".bad") == 2);
  }
}

TEST_CASE("cli: blind bundles omit the optimum") {
  CliDir dir;
  const std::string out = dir.path.string();
  REQUIRE(run_cli("gen --n 8 --fixed 2 --count 1 --seed 3 --blind --out " + out) == 0);
  const auto bundle = tworoute::read_2tsp_bundle((dir.path / "inst_0000").string());
  CHECK_FALSE(bundle.optimum.has_value());
  CHECK_FALSE(bundle.hidden_order.has_value());
}

TEST_CASE("cli: vrp generation, exact solve, oracle agreement, verify") {
  CliDir dir;
  const std::string out = dir.path.string();
  REQUIRE(run_cli("gen --family random-2vrp --n 7 --count 1 --seed 11 --out " + out) == 0);
  const std::string inst = (dir.path / "inst_0000.2vrp").string();
  REQUIRE(fs::exists(inst));

  CHECK(run_cli("solve 2vrp-exact " + inst + " --out " + inst + ".a") == 0);
  CHECK(run_cli("solve 2vrp-oracle " + inst + " --out " + inst + ".b") == 0);
  const auto sa = tworoute::read_2vrp_solution(inst + ".a");
  const auto sb = tworoute::read_2vrp_solution(inst + ".b");
  CHECK(sa.cost == doctest::Approx(sb.cost).epsilon(1e-12));
  CHECK(run_cli("verify " + inst + " " + inst + ".a") == 0);
}

TEST_CASE("cli: heuristic over a bundle reaches the known optimum") {
  CliDir dir;
  const std::string out = dir.path.string();
  REQUIRE(run_cli("gen --n 12 --fixed 4 --count 1 --seed 21 --out " + out) == 0);
  const std::string base = (dir.path / "inst_0000").string();
  REQUIRE(run_cli("solve heuristic " + base + " --generator ksh --repetitions 4 --seed 1 --s 2 --l 1") == 0);
  const auto bundle = tworoute::read_2tsp_bundle(base);
  const auto sol = tworoute::read_two_tour_solution(base + ".sol");
  CHECK(sol.total_length == doctest::Approx(*bundle.optimum).epsilon(1e-9));

  // Stochastic modes demand a seed.
  CHECK(run_cli("solve heuristic " + base + " --generator rndh") != 0);
}

TEST_CASE("cli: experiment artifacts") {
  CliDir dir;
  const std::string out = (dir.path / "exp").string();
  REQUIRE(run_cli("experiment --family kalmanson-2tsp --count 3 --n 10 --fixed 4 --s 2 --l 1 "
                  "--repetitions 6 --checkpoints 1,3,6 --seed 9 --stop-at-optimum --out " +
                  out) == 0);
  REQUIRE(fs::exists(fs::path(out) / "iterations.csv"));
  REQUIRE(fs::exists(fs::path(out) / "checkpoints.csv"));
  REQUIRE(fs::exists(fs::path(out) / "instances.csv"));

  // The checkpoint table has a header plus one row per checkpoint, and the
  // optimal count never decreases.
  std::ifstream cps(fs::path(out) / "checkpoints.csv");
  std::string line;
  std::getline(cps, line);
  int rows = 0, last_opt = 0;
  while (std::getline(cps, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string tok;
    std::vector<std::string> cells;
    while (std::getline(ss, tok, ',')) cells.push_back(tok);
    REQUIRE(cells.size() == 9);
    const int opt = std::stoi(cells[7]);
    CHECK(opt >= last_opt);
    last_opt = opt;
  }
  CHECK(rows == 3);

  SUBCASE("empty checkpoint list is rejected") {
    CHECK(run_cli("experiment --count 1 --n 8 --fixed 2 --seed 1 --checkpoints '' --out " + out) != 0);
  }
}

#endif  // TWOROUTE_CLI_PATH
