#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>

#include "specnorm/matrix.hpp"
#include "specnorm/rng.hpp"

namespace specnorm {

// Constant in the start-vector overlap bound: with probability at least
// 1 - (2/pi + 2) dp^(1/3), the squared overlap with the top eigenvector is
// at least dp / d.
inline constexpr double kOverlapConstant = 2.0 / std::numbers::pi + 2.0;
// Its cube, the leading constant of the high-probability power-iteration
// convergence bound.
inline constexpr double kPowerBoundConstant =
    kOverlapConstant * kOverlapConstant * kOverlapConstant;

struct PowerParams {
  double epsilon = 0.1;
  double delta = 0.05;
  std::size_t max_iterations = 0;  // 0: derive via iteration_count
  bool adaptive_stop = false;
  double adaptive_tol = 0.0;
  std::uint64_t seed = 0;
};

struct PowerState {
  Vector iterate;            // unit vector x_n
  std::size_t iteration = 0;
  double estimate_sq = 0.0;  // lambda_n^2 = ||A^T A x_n||
};

// Unit vector with rotation-invariant direction: d independent standard
// normals, normalized. Redraws on an all-zero sample (probability zero).
Vector isotropic_start(std::size_t d, Rng& rng);
Vector isotropic_start(std::size_t d, std::uint64_t seed);

// Iterations that force lambda_n^2 >= (1 - eps) sigma_1^2 with probability
// at least 1 - delta:
//   n = ceil((ln(c d) + 3 ln(1/delta) + ln(1/kappa)) / (2 ln(1/(1 - eps/2))))
// with c = kPowerBoundConstant and kappa = (1 - eps/2)^-2 - 1. Running n
// steps pushes the tail term of the convergence bound below kappa, which
// yields lambda_n^2 >= (1 - eps/2)^2 sigma_1^2 >= (1 - eps) sigma_1^2.
std::size_t iteration_count(std::size_t d, double epsilon, double delta);

// One iteration x_{n+1} = A^T A x_n / ||A^T A x_n|| with the estimate
// refreshed as ||A^T A x_{n+1}||.
PowerState power_step(const Matrix& m, const PowerState& s);

struct NormEstimate {
  double estimate_sq = 0.0;
  PowerState state;
  bool degenerate = false;  // zero matrix: no iteration possible
};

// Runs the power iteration from an isotropic start. The estimate never
// exceeds ||m||^2 and is nondecreasing across iterations.
NormEstimate estimate_norm_sq(const Matrix& m, const PowerParams& params);

}  // namespace specnorm
