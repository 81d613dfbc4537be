/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

std::filesystem::path temp_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "fockchan_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

int run(const std::string &args) {
  const int status = std::system((g_binary + " " + args).c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

}  // namespace

TEST_CASE("choi subcommand") {
  const auto dir = temp_dir();
  SUBCASE("identity channel") {
    const auto out = dir / "choi_id.json";
    CHECK(run("choi --tau 1 --nu 1 --gain 1 --out " + out.string()) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"fidelity\": 1") != std::string::npos);
    CHECK(body.find("\"00\"") != std::string::npos);
  }
  SUBCASE("lossy channel matches the closed form") {
    const auto out = dir / "choi_loss.json";
    CHECK(run("choi --tau 0.5 --out " + out.string()) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("0.375") != std::string::npos);  // (1 - tau^2)/2
    CHECK(body.find("0.25") != std::string::npos);   // off-diagonal tau/2
    CHECK(body.find("\"t_eff\": 0.25") != std::string::npos);
  }
  SUBCASE("suppressed channel") {
    const auto out = dir / "choi_sup.json";
    CHECK(run("choi --tau 0.70710678 --nu 0.70710678 --gain 2 --out " +
              out.string()) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("0.8888888") != std::string::npos);
    CHECK(body.find("0.1111111") != std::string::npos);
  }
  SUBCASE("invalid parameters exit with usage code") {
    CHECK(run("choi --tau 1.7 --out /dev/null 2>/dev/null") == 1);
    CHECK(run("choi --tau 0.5 --gain 0.2 --out /dev/null 2>/dev/null") == 1);
  }
}

TEST_CASE("sweep subcommand") {
  const auto dir = temp_dir();
  const auto cfg = dir / "sweep.json";
  write_file(cfg, R"({
    "taus": [0.70710678118655],
    "gain-min": 1.0,
    "gain-max": 4.0,
    "gain-points": 7,
    "policy": "fig4"
  })");
  SUBCASE("csv structure and round trip") {
    const auto out = dir / "sweep.csv";
    CHECK(run("sweep --config " + cfg.string() + " --out " + out.string()) ==
          0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "strategy,tau,nu,g,fidelity,t_eff,p_succ,p_rel");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) ++rows;
    }
    CHECK(rows == 7);
  }
  SUBCASE("byte-identical across runs") {
    const auto out1 = dir / "sweep1.csv";
    const auto out2 = dir / "sweep2.csv";
    CHECK(run("sweep --config " + cfg.string() + " --out " + out1.string()) ==
          0);
    CHECK(run("sweep --config " + cfg.string() + " --out " + out2.string()) ==
          0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
  }
  SUBCASE("print-schema") {
    CHECK(run("sweep --print-schema > " + (dir / "schema.json").string()) ==
          0);
    CHECK(slurp(dir / "schema.json").find("gain-points") !=
          std::string::npos);
  }
  SUBCASE("missing config rejected") {
    CHECK(run("sweep 2>/dev/null") == 1);
    CHECK(run("sweep --config /nonexistent.json 2>/dev/null") == 1);
  }
}

TEST_CASE("tomo subcommand") {
  const auto dir = temp_dir();
  SUBCASE("ideal frequencies recover the channel") {
    const auto out = dir / "tomo_ideal.json";
    CHECK(run("tomo --tau 0.70710678 --counts 100000 --ideal --out " +
              out.string()) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"converged\": true") != std::string::npos);
    const bool near_unit =
        body.find("\"reconstruction_fidelity\": 1") != std::string::npos ||
        body.find("\"reconstruction_fidelity\": 0.99999999") !=
            std::string::npos;
    CHECK(near_unit);
  }
  SUBCASE("sampled run is deterministic for a fixed seed") {
    const auto out1 = dir / "tomo1.json";
    const auto out2 = dir / "tomo2.json";
    const std::string args =
        "tomo --tau 0.70710678 --counts 100000 --seed 42 --out ";
    CHECK(run(args + out1.string()) == 0);
    CHECK(run(args + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
  }
  SUBCASE("zero counts rejected") {
    CHECK(run("tomo --tau 0.5 --counts 0 2>/dev/null") == 1);
  }
}

TEST_CASE("optimize subcommand") {
  const auto dir = temp_dir();
  const auto out = dir / "opt.json";
  CHECK(run("optimize --tau 0.70710678 --target-fidelity 0.888888889 "
            "--out " +
            out.string()) == 0);
  const std::string body = slurp(out);
  CHECK(body.find("\"g\": 2") != std::string::npos);
  CHECK(body.find("\"p_succ\": 0.2812") != std::string::npos);
  SUBCASE("infeasible target exits with usage code") {
    CHECK(run("optimize --tau 0.5 --target-fidelity 1.0 2>/dev/null") == 1);
  }
}

int main(int argc, char **argv) {
  // Last argument is the path to the fockchan binary under test.
  if (argc >= 2 && argv[argc - 1][0] != '-') {
    g_binary = argv[argc - 1];
    --argc;
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest-args] <path-to-fockchan>\n");
    return 1;
  }
  doctest::Context context;
  context.applyCommandLine(argc, argv);
  return context.run();
}
