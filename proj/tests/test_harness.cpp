#include <doctest.h>

#include <cmath>

#include "specnorm/harness.hpp"

using specnorm::HarnessConfig;
using specnorm::lemma1_experiment;
using specnorm::lemma3_experiment;
using specnorm::MatrixFamily;
using specnorm::ParameterError;
using specnorm::theorem1_experiment;
using specnorm::TrialStats;

TEST_CASE("overlap experiment is trivial in one dimension") {
  const TrialStats st = lemma3_experiment(1, 0.01, 10000, 5);
  CHECK(st.successes == st.trials);
  CHECK(st.empirical_rate == 1.0);
  CHECK(st.passed);
}

TEST_CASE("overlap bound arithmetic") {
  const TrialStats st = lemma3_experiment(50, 1e-3, 10000, 7);
  CHECK(st.bound == doctest::Approx(0.7363380227632419).epsilon(1e-14));
  CHECK(st.threshold < st.bound);
  CHECK(st.passed);
}

TEST_CASE("experiments enforce their minimum trial counts") {
  CHECK_THROWS_AS(lemma3_experiment(5, 0.01, 9999, 1), ParameterError);
  CHECK_THROWS_AS(
      lemma1_experiment(MatrixFamily::kGaussian, 20, 5, 0.5, 0.2, 99, 1),
      ParameterError);
  CHECK_THROWS_AS(
      theorem1_experiment(MatrixFamily::kGaussian, 20, 5, 0.2, 0.1, 99, 1),
      ParameterError);
  CHECK_THROWS_AS(lemma3_experiment(5, 1.5, 10000, 1), ParameterError);
}

TEST_CASE("sketch concentration passes at the prescribed sample count") {
  const TrialStats st =
      lemma1_experiment(MatrixFamily::kGaussian, 60, 6, 0.5, 0.2, 100, 11);
  CHECK(st.passed);
  CHECK(st.bound == 0.8);
}

TEST_CASE("inflating the sample count drives the rate toward one") {
  const TrialStats base =
      lemma1_experiment(MatrixFamily::kGaussian, 60, 6, 0.5, 0.2, 100, 13);
  const TrialStats inflated = lemma1_experiment(MatrixFamily::kGaussian, 60, 6,
                                                0.5, 0.2, 100, 13, 3.0, 4.0);
  CHECK(inflated.successes >= base.successes);
  CHECK(inflated.empirical_rate >= 0.99);
}

TEST_CASE("dominant row families still concentrate") {
  const TrialStats st =
      lemma1_experiment(MatrixFamily::kDominantRow, 60, 6, 0.5, 0.2, 100, 17);
  CHECK(st.passed);
}

TEST_CASE("end-to-end estimates hit the interval on every family") {
  for (const MatrixFamily f :
       {MatrixFamily::kGaussian, MatrixFamily::kPowerLaw,
        MatrixFamily::kDominantRow, MatrixFamily::kBoundaryGap}) {
    const TrialStats st = theorem1_experiment(f, 60, 10, 0.2, 0.1, 100, 19);
    CHECK(st.passed);
  }
}

TEST_CASE("experiments are reproducible from their seed") {
  const TrialStats a = lemma3_experiment(20, 0.01, 10000, 23);
  const TrialStats b = lemma3_experiment(20, 0.01, 10000, 23);
  CHECK(a.successes == b.successes);
  const TrialStats c =
      theorem1_experiment(MatrixFamily::kGaussian, 40, 8, 0.2, 0.1, 100, 29);
  const TrialStats d =
      theorem1_experiment(MatrixFamily::kGaussian, 40, 8, 0.2, 0.1, 100, 29);
  CHECK(c.successes == d.successes);
}

TEST_CASE("run_harness aggregates and validates") {
  HarnessConfig config;
  config.experiment = "lemma1";
  config.trials = 100;
  config.seed = 31;
  const auto report = specnorm::run_harness(config);
  CHECK(report.experiments.size() == 2);
  CHECK(report.all_passed);

  config.experiment = "nope";
  CHECK_THROWS_AS(specnorm::run_harness(config), ParameterError);
}
