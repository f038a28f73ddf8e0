#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

#include "specnorm/matrix_io.hpp"
#include "specnorm/rng.hpp"

#ifndef SPECNORM_CLI_PATH
#error "SPECNORM_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SPECNORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "specnorm_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string strip_wall_time(std::string json_text) {
  static const std::regex wall(R"("wall_time_ms":[^,}]*)");
  return std::regex_replace(json_text, wall, "\"wall_time_ms\":0");
}

fs::path write_identity_mm(std::size_t d, const std::string& name) {
  const fs::path path = temp_file(name);
  std::ofstream out(path);
  out << "%%MatrixMarket matrix coordinate real general\n" << d << " " << d
      << " " << d << "\n";
  for (std::size_t i = 1; i <= d; ++i) out << i << " " << i << " 1.0\n";
  return path;
}

}  // namespace

TEST_CASE("cli estimates the identity") {
  const fs::path path = write_identity_mm(10, "id10.mtx");
  const CliResult r = run_cli("estimate " + path.string() +
                              " --eps 0.1 --delta 0.1 --seed 7");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["estimate_sq"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["effective_rank"].get<double>() == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(j["seed"].get<std::uint64_t>() == 7);
  CHECK(j["eps"].get<double>() == 0.1);
  CHECK(j.contains("wall_time_ms"));
  CHECK(j.contains("r_used"));
  CHECK(j.contains("iterations_used"));
  CHECK(j.contains("method_used"));
  CHECK(j.contains("estimate"));
  CHECK(j.contains("delta"));
}

TEST_CASE("cli output is byte-identical apart from the wall time") {
  const fs::path path = write_identity_mm(10, "id10b.mtx");
  const std::string args =
      "estimate " + path.string() + " --eps 0.1 --delta 0.1 --seed 7";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));
}

TEST_CASE("cli exact method reports the closed form") {
  const fs::path path = temp_file("small.csv");
  std::ofstream(path) << "1,2\n3,4\n";
  const CliResult r = run_cli("estimate " + path.string() +
                              " --format dense-csv --method exact --seed 1");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["estimate_sq"].get<double>() ==
        doctest::Approx(29.866068747318506).epsilon(1e-9));
  CHECK(j["method_used"] == "exact");
  CHECK(j["r_used"].is_null());
}

TEST_CASE("cli plain output leads with the estimate") {
  const fs::path path = write_identity_mm(4, "id4.mtx");
  const CliResult r = run_cli("estimate " + path.string() +
                              " --seed 3 --output plain");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("estimate ", 0) == 0);
}

TEST_CASE("cli exit codes distinguish failure classes") {
  CHECK(run_cli("estimate /nonexistent.mtx --seed 1").exit_code == 2);

  const fs::path bad = temp_file("bad.mtx");
  std::ofstream(bad) << "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 oops\n";
  CHECK(run_cli("estimate " + bad.string() + " --seed 1").exit_code == 2);

  const fs::path ok = write_identity_mm(3, "id3.mtx");
  CHECK(run_cli("estimate " + ok.string() + " --eps 1.5 --seed 1").exit_code == 3);
  CHECK(run_cli("estimate " + ok.string() + " --method bogus --seed 1").exit_code == 3);
  CHECK(run_cli("").exit_code == 3);

  const fs::path big = write_identity_mm(513, "id513.mtx");
  CHECK(run_cli("estimate " + big.string() + " --method exact --seed 1").exit_code == 4);
}

TEST_CASE("cli harness subcommand emits a json verdict") {
  const CliResult r = run_cli("harness --experiment lemma1 --trials 100 --seed 5");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_passed"].get<bool>());
  CHECK(j["experiments"].size() == 2);
  for (const auto& exp : j["experiments"]) {
    CHECK(exp["trials"].get<std::size_t>() == 100);
    CHECK(exp.contains("empirical_rate"));
    CHECK(exp.contains("bound"));
    CHECK(exp.contains("threshold"));
  }
}

TEST_CASE("cli zero matrix reports a degenerate estimate") {
  const fs::path path = temp_file("zero.mtx");
  std::ofstream(path) << "%%MatrixMarket matrix coordinate real general\n4 3 0\n";
  const CliResult r = run_cli("estimate " + path.string() + " --seed 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["estimate_sq"].get<double>() == 0.0);
  CHECK(j["effective_rank"].get<double>() == 0.0);
  CHECK(j["degenerate"].get<bool>());
}
