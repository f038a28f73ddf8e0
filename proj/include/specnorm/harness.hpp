#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "specnorm/families.hpp"

namespace specnorm {

// Monte Carlo tallies for one probabilistic claim. The claim is a proven
// lower bound on the success probability, so the test only fails on a
// decisive violation: empirical_rate < bound - slack binomial standard
// errors.
struct TrialStats {
  std::string name;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double empirical_rate = 0.0;
  double bound = 0.0;
  double slack = 3.0;      // allowed standard errors below the bound
  double threshold = 0.0;  // bound - slack * sqrt(bound (1 - bound) / trials)
  bool passed = false;
};

// Sketch concentration: the event ||sketch^T sketch - A^T A|| <= eps ||A||^2
// with r = required_samples(d, eps, delta) rows (times r_inflation), checked
// against the exact oracle. Bound: 1 - delta.
TrialStats lemma1_experiment(MatrixFamily family, std::size_t n_rows,
                             std::size_t d, double epsilon, double delta,
                             std::size_t trials, std::uint64_t seed,
                             double slack = 3.0, double r_inflation = 1.0);

// Start-vector overlap: the event (first coordinate of an isotropic unit
// vector)^2 >= delta_prime / d. Bound: 1 - (2/pi + 2) delta_prime^(1/3).
TrialStats lemma3_experiment(std::size_t d, double delta_prime,
                             std::size_t trials, std::uint64_t seed,
                             double slack = 3.0);

// End-to-end estimator: the event that the method=auto estimate lands in
// [(1 - eps) sigma_1^2, (1 + eps) sigma_1^2] around the oracle value.
// Bound: 1 - delta.
TrialStats theorem1_experiment(MatrixFamily family, std::size_t n_rows,
                               std::size_t d, double epsilon, double delta,
                               std::size_t trials, std::uint64_t seed,
                               double slack = 3.0);

struct HarnessConfig {
  std::string experiment = "all";  // lemma1 | lemma3 | theorem1 | all
  std::size_t trials = 0;          // 0: per-experiment defaults
  std::uint64_t seed = 1;
  double slack = 3.0;
};

struct HarnessReport {
  std::vector<TrialStats> experiments;
  bool all_passed = false;
};

HarnessReport run_harness(const HarnessConfig& config);

}  // namespace specnorm
