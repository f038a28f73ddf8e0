#include "specnorm/harness.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>

#include "specnorm/estimator.hpp"
#include "specnorm/oracle.hpp"
#include "specnorm/power.hpp"
#include "specnorm/sketch.hpp"

namespace specnorm {

namespace {

TrialStats finalize(std::string name, std::size_t trials, std::size_t successes,
                    double bound, double slack) {
  TrialStats st;
  st.name = std::move(name);
  st.trials = trials;
  st.successes = successes;
  st.empirical_rate = static_cast<double>(successes) / static_cast<double>(trials);
  st.bound = bound;
  st.slack = slack;
  const double clamped = std::min(std::max(bound, 0.0), 1.0);
  st.threshold = clamped - slack * std::sqrt(clamped * (1.0 - clamped) /
                                             static_cast<double>(trials));
  st.passed = st.empirical_rate >= st.threshold;
  return st;
}

}  // namespace

TrialStats lemma1_experiment(MatrixFamily family, std::size_t n_rows,
                             std::size_t d, double epsilon, double delta,
                             std::size_t trials, std::uint64_t seed,
                             double slack, double r_inflation) {
  if (trials < 100) throw ParameterError("lemma1_experiment: need at least 100 trials");
  if (r_inflation < 1.0) throw ParameterError("lemma1_experiment: r_inflation must be >= 1");
  const std::uint64_t r_base = required_samples(d, epsilon, delta);
  const std::size_t r =
      static_cast<std::size_t>(std::ceil(static_cast<double>(r_base) * r_inflation));

  std::size_t successes = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : successes)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Matrix a = sample_family(family, n_rows, d, epsilon, rng);
    const std::vector<double> gram_a = oracle::gram_matrix(a);
    const double sigma1_sq =
        oracle::jacobi_eigenvalues(gram_a, d).eigenvalues.front();

    const SamplingPlan plan = make_plan(a);
    SketchParams sp;
    sp.epsilon = epsilon;
    sp.delta = delta;
    sp.r = r;
    sp.seed = rng.next_u64();
    const Matrix sketch = draw_sketch(a, plan, sp);

    std::vector<double> diff = oracle::gram_matrix(sketch);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= gram_a[i];
    const double deviation = oracle::symmetric_spectral_norm(std::move(diff), d);
    if (deviation <= epsilon * sigma1_sq) ++successes;
  }

  std::ostringstream name;
  name << "lemma1/" << family_name(family) << " " << n_rows << "x" << d
       << " eps=" << epsilon << " delta=" << delta << " r=" << r;
  return finalize(name.str(), trials, successes, 1.0 - delta, slack);
}

TrialStats lemma3_experiment(std::size_t d, double delta_prime,
                             std::size_t trials, std::uint64_t seed,
                             double slack) {
  if (trials < 10000) throw ParameterError("lemma3_experiment: need at least 10^4 trials");
  if (d < 1) throw ParameterError("lemma3_experiment: d must be >= 1");
  detail::require_open_unit(delta_prime, "delta_prime");

  const double cutoff = delta_prime / static_cast<double>(d);
  std::size_t successes = 0;
#pragma omp parallel for schedule(static) reduction(+ : successes)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    const Vector x = isotropic_start(d, derive_seed(seed, static_cast<std::uint64_t>(t)));
    if (x[0] * x[0] >= cutoff) ++successes;
  }

  const double bound = 1.0 - kOverlapConstant * std::cbrt(delta_prime);
  std::ostringstream name;
  name << "lemma3 d=" << d << " delta'=" << delta_prime;
  return finalize(name.str(), trials, successes, bound, slack);
}

TrialStats theorem1_experiment(MatrixFamily family, std::size_t n_rows,
                               std::size_t d, double epsilon, double delta,
                               std::size_t trials, std::uint64_t seed,
                               double slack) {
  if (trials < 100) throw ParameterError("theorem1_experiment: need at least 100 trials");

  std::size_t successes = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : successes)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Matrix a = sample_family(family, n_rows, d, epsilon, rng);
    const double sigma1_sq = oracle::exact_norm_sq(a);

    EstimateRequest req;
    req.epsilon = epsilon;
    req.delta = delta;
    req.method = Method::kAuto;
    req.seed = rng.next_u64();
    const EstimateReport rep = estimate(a, req);
    if (rep.estimate_sq >= (1.0 - epsilon) * sigma1_sq &&
        rep.estimate_sq <= (1.0 + epsilon) * sigma1_sq) {
      ++successes;
    }
  }

  std::ostringstream name;
  name << "theorem1/" << family_name(family) << " " << n_rows << "x" << d
       << " eps=" << epsilon << " delta=" << delta;
  return finalize(name.str(), trials, successes, 1.0 - delta, slack);
}

HarnessReport run_harness(const HarnessConfig& config) {
  const std::string& which = config.experiment;
  if (which != "all" && which != "lemma1" && which != "lemma3" &&
      which != "theorem1") {
    throw ParameterError("unknown experiment '" + which + "'");
  }
  HarnessReport report;
  const std::uint64_t seed = config.seed;
  const double slack = config.slack;
  auto trials_or = [&](std::size_t fallback) {
    return config.trials > 0 ? config.trials : fallback;
  };

  if (which == "all" || which == "lemma1") {
    const std::size_t t = trials_or(200);
    report.experiments.push_back(lemma1_experiment(
        MatrixFamily::kGaussian, 100, 10, 0.5, 0.2, t, derive_seed(seed, 11), slack));
    report.experiments.push_back(lemma1_experiment(
        MatrixFamily::kDominantRow, 100, 10, 0.5, 0.2, t, derive_seed(seed, 12), slack));
  }
  if (which == "all" || which == "lemma3") {
    const std::size_t t = trials_or(100000);
    std::uint64_t stream = 21;
    for (const std::size_t d : {std::size_t{5}, std::size_t{50}, std::size_t{500}}) {
      for (const double dp : {1e-3, 1e-2}) {
        report.experiments.push_back(
            lemma3_experiment(d, dp, t, derive_seed(seed, stream++), slack));
      }
    }
  }
  if (which == "all" || which == "theorem1") {
    report.experiments.push_back(theorem1_experiment(
        MatrixFamily::kGaussian, 200, 30, 0.1, 0.05, trials_or(400),
        derive_seed(seed, 31), slack));
    report.experiments.push_back(theorem1_experiment(
        MatrixFamily::kPowerLaw, 200, 30, 0.1, 0.05, trials_or(200),
        derive_seed(seed, 32), slack));
    report.experiments.push_back(theorem1_experiment(
        MatrixFamily::kDominantRow, 200, 30, 0.1, 0.05, trials_or(200),
        derive_seed(seed, 33), slack));
    report.experiments.push_back(theorem1_experiment(
        MatrixFamily::kBoundaryGap, 200, 30, 0.1, 0.05, trials_or(200),
        derive_seed(seed, 34), slack));
  }

  report.all_passed = true;
  for (const TrialStats& st : report.experiments) {
    report.all_passed = report.all_passed && st.passed;
  }
  return report;
}

}  // namespace specnorm
