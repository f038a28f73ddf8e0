#include "specnorm/power.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace specnorm {

Vector isotropic_start(std::size_t d, Rng& rng) {
  if (d < 1) throw ParameterError("isotropic_start: d must be >= 1");
  Vector x(d);
  double s = 0.0;
  do {
    for (std::size_t j = 0; j < d; ++j) x[j] = rng.normal();
    s = norm(x);
  } while (s == 0.0);
  for (std::size_t j = 0; j < d; ++j) x[j] /= s;
  return x;
}

Vector isotropic_start(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return isotropic_start(d, rng);
}

std::size_t iteration_count(std::size_t d, double epsilon, double delta) {
  if (d < 1) throw ParameterError("iteration_count: d must be >= 1");
  detail::require_open_unit(epsilon, "epsilon");
  detail::require_open_unit(delta, "delta");
  const double eps_half = 0.5 * epsilon;
  const double shrink = 1.0 - eps_half;
  const double kappa = 1.0 / (shrink * shrink) - 1.0;
  const double numer = std::log(kPowerBoundConstant * static_cast<double>(d)) +
                       3.0 * std::log(1.0 / delta) + std::log(1.0 / kappa);
  const double denom = 2.0 * std::log(1.0 / shrink);
  const double n = std::ceil(numer / denom);
  return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

namespace {

[[noreturn]] void throw_annihilated() {
  throw NumericalError(
      "iterate annihilated: the iterate has no component in the row space");
}

}  // namespace

PowerState power_step(const Matrix& m, const PowerState& s) {
  Vector g = m.gram_apply(s.iterate);
  const double gn = norm(g);
  if (gn == 0.0) throw_annihilated();
  for (double& v : g) v /= gn;
  const Vector g2 = m.gram_apply(g);
  return PowerState{std::move(g), s.iteration + 1, norm(g2)};
}

NormEstimate estimate_norm_sq(const Matrix& m, const PowerParams& params) {
  const std::size_t d = m.n_cols();
  if (params.adaptive_stop && !(params.adaptive_tol > 0.0)) {
    throw ParameterError("adaptive_tol must be positive when adaptive_stop is set");
  }
  std::size_t total = params.max_iterations;
  if (total == 0) total = iteration_count(d, params.epsilon, params.delta);

  if (m.frobenius_sq() == 0.0) {
    return NormEstimate{0.0, PowerState{Vector(d, 0.0), 0, 0.0}, true};
  }

  Rng rng(params.seed);
  Vector x = isotropic_start(d, rng);
  Vector g = m.gram_apply(x);
  double gn = norm(g);
  if (gn == 0.0) throw_annihilated();

  // Chained steps share the gram product: the normalization of g_n is
  // x_{n+1}, so each iteration costs one gram_apply.
  double history[6] = {0, 0, 0, 0, 0, 0};
  double lambda_sq = 0.0;
  std::size_t done = 0;
  for (std::size_t it = 1; it <= total; ++it) {
    for (std::size_t j = 0; j < d; ++j) x[j] = g[j] / gn;
    g = m.gram_apply(x);
    gn = norm(g);
    if (gn == 0.0) throw_annihilated();
    lambda_sq = gn;
    done = it;
    if (params.adaptive_stop) {
      history[it % 6] = lambda_sq;
      if (it >= 6) {
        const double old = history[(it + 1) % 6];  // estimate from 5 steps ago
        if ((lambda_sq - old) / lambda_sq < params.adaptive_tol) break;
      }
    }
  }
  return NormEstimate{lambda_sq, PowerState{std::move(x), done, lambda_sq},
                      false};
}

}  // namespace specnorm
