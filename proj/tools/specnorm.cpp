// Command-line front end: estimate the spectral norm of a matrix read from
// a Matrix Market or CSV file, or run the Monte Carlo validation harness.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "specnorm/estimator.hpp"
#include "specnorm/harness.hpp"
#include "specnorm/matrix_io.hpp"

namespace {

using specnorm::Method;
using specnorm::MatrixFormat;

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct EstimateOptions {
  std::string input_path;
  MatrixFormat format = MatrixFormat::kMatrixMarket;
  double eps = 0.1;
  double delta = 0.05;
  Method method = Method::kAuto;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string output = "json";
};

int run_estimate(const EstimateOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const specnorm::Matrix m = specnorm::read_matrix(opt.input_path, opt.format);

  specnorm::EstimateRequest req;
  req.epsilon = opt.eps;
  req.delta = opt.delta;
  req.method = opt.method;
  req.seed = opt.seed;
  const specnorm::EstimateReport rep = specnorm::estimate(m, req);
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();

  if (opt.output == "json") {
    nlohmann::ordered_json j;
    j["estimate_sq"] = rep.estimate_sq;
    j["estimate"] = std::sqrt(rep.estimate_sq);
    j["effective_rank"] = rep.effective_rank;
    j["method_used"] = specnorm::method_name(rep.method_used);
    if (rep.r_used) {
      j["r_used"] = *rep.r_used;
    } else {
      j["r_used"] = nullptr;
    }
    j["iterations_used"] = rep.iterations_used;
    j["eps"] = req.epsilon;
    j["delta"] = req.delta;
    j["seed"] = req.seed;
    j["wall_time_ms"] = wall_ms;
    if (rep.degenerate) j["degenerate"] = true;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "estimate " << std::sqrt(rep.estimate_sq) << "\n";
    std::cout << "estimate_sq " << rep.estimate_sq << "\n";
    std::cout << "effective_rank " << rep.effective_rank << "\n";
    std::cout << "method_used " << specnorm::method_name(rep.method_used) << "\n";
    if (rep.r_used) std::cout << "r_used " << *rep.r_used << "\n";
    std::cout << "iterations_used " << rep.iterations_used << "\n";
    std::cout << "seed " << req.seed << "\n";
  }
  return 0;
}

int run_harness_cmd(const specnorm::HarnessConfig& config,
                    const std::string& output) {
  const specnorm::HarnessReport report = specnorm::run_harness(config);
  if (output == "json") {
    nlohmann::ordered_json j;
    j["experiments"] = nlohmann::ordered_json::array();
    for (const specnorm::TrialStats& st : report.experiments) {
      nlohmann::ordered_json e;
      e["name"] = st.name;
      e["trials"] = st.trials;
      e["successes"] = st.successes;
      e["empirical_rate"] = st.empirical_rate;
      e["bound"] = st.bound;
      e["slack"] = st.slack;
      e["threshold"] = st.threshold;
      e["passed"] = st.passed;
      j["experiments"].push_back(std::move(e));
    }
    j["all_passed"] = report.all_passed;
    j["seed"] = config.seed;
    std::cout << j.dump() << "\n";
  } else {
    for (const specnorm::TrialStats& st : report.experiments) {
      std::cout << (st.passed ? "PASS " : "FAIL ") << st.name << " rate="
                << st.empirical_rate << " bound=" << st.bound
                << " threshold=" << st.threshold << "\n";
    }
    std::cout << (report.all_passed ? "all passed" : "FAILURES present") << "\n";
  }
  return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized spectral norm estimator"};
  app.require_subcommand(1);

  const std::map<std::string, Method> method_names{
      {"auto", Method::kAuto},
      {"sketch", Method::kSketch},
      {"direct", Method::kDirect},
      {"exact", Method::kExact}};
  const std::map<std::string, MatrixFormat> format_names{
      {"matrix-market", MatrixFormat::kMatrixMarket},
      {"dense-csv", MatrixFormat::kDenseCsv}};

  EstimateOptions est;
  CLI::App* est_cmd = app.add_subcommand("estimate", "Estimate the spectral norm of a matrix file");
  est_cmd->add_option("input", est.input_path, "Input matrix file")->required();
  est_cmd->add_option("--format", est.format, "Input format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_str("matrix-market");
  est_cmd->add_option("--eps", est.eps, "Relative error tolerance in (0,1)");
  est_cmd->add_option("--delta", est.delta, "Failure probability in (0,1)");
  est_cmd->add_option("--method", est.method, "Estimation method")
      ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case))
      ->default_str("auto");
  CLI::Option* est_seed = est_cmd->add_option("--seed", est.seed, "RNG seed (default: from entropy)");
  est_cmd->add_option("--output", est.output, "Report style")
      ->check(CLI::IsMember({"json", "plain"}))
      ->default_str("json");

  specnorm::HarnessConfig hc;
  std::string harness_output = "json";
  CLI::App* har_cmd = app.add_subcommand("harness", "Monte Carlo validation of the probabilistic bounds");
  har_cmd->add_option("--experiment", hc.experiment, "Which experiment to run")
      ->check(CLI::IsMember({"lemma1", "lemma3", "theorem1", "all"}))
      ->default_str("all");
  har_cmd->add_option("--trials", hc.trials, "Trial count override (0: per-experiment defaults)");
  CLI::Option* har_seed = har_cmd->add_option("--seed", hc.seed, "RNG seed (default: from entropy)");
  har_cmd->add_option("--slack", hc.slack, "Allowed binomial standard errors below each bound");
  har_cmd->add_option("--output", harness_output, "Report style")
      ->check(CLI::IsMember({"json", "plain"}))
      ->default_str("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (est_cmd->parsed()) {
      if (!*est_seed) est.seed = entropy_seed();
      return run_estimate(est);
    }
    if (!*har_seed) hc.seed = entropy_seed();
    return run_harness_cmd(hc, harness_output);
  } catch (const specnorm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const specnorm::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const specnorm::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
