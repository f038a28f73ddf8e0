#pragma once

#include <cstddef>
#include <cstdint>

#include "specnorm/matrix.hpp"

namespace specnorm {

// Row-sampling distribution p_i = ||a_i||^2 / ||A||_F^2 together with its
// prefix-sum table for O(log n) draws. Zero rows get p_i = 0 and are never
// drawn; they contribute nothing to A^T A.
struct SamplingPlan {
  Vector probabilities;
  Vector cumulative;  // prefix sums, tail forced to exactly 1.0
  double source_frobenius_sq = 0.0;
  std::size_t source_rows = 0;
};

SamplingPlan make_plan(const Matrix& m);

// Sample count that keeps the sketch Gram matrix within eps * ||A||^2 of
// A^T A with probability 1 - delta: ceil((4 d / eps^2) ln(2 d / delta)).
std::uint64_t required_samples(std::size_t d, double epsilon, double delta);

struct SketchParams {
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t r = 0;
  std::uint64_t seed = 0;

  static SketchParams from_tolerances(std::size_t d, double epsilon,
                                      double delta, std::uint64_t seed);
};

// One weighted draw: the first index whose cumulative weight exceeds u.
std::size_t draw_index(const SamplingPlan& plan, double u);

// r i.i.d. rows a_i / sqrt(r p_i), stacked into an r x d matrix that keeps
// the storage kind of the source. Deterministic for a fixed seed. Every
// sketch row has squared norm ||A||_F^2 / r, and E[sketch^T sketch] = A^T A.
Matrix draw_sketch(const Matrix& m, const SamplingPlan& plan,
                   const SketchParams& params);

}  // namespace specnorm
