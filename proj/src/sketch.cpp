#include "specnorm/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "specnorm/rng.hpp"

namespace specnorm {

SamplingPlan make_plan(const Matrix& m) {
  const double fro_sq = m.frobenius_sq();
  if (!(fro_sq > 0.0)) {
    throw ParameterError("zero matrix has no sampling distribution");
  }
  SamplingPlan plan;
  plan.source_frobenius_sq = fro_sq;
  plan.source_rows = m.n_rows();
  plan.probabilities = m.row_norms_squared();
  for (double& p : plan.probabilities) p /= fro_sq;

  plan.cumulative.resize(plan.probabilities.size());
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < plan.probabilities.size(); ++i) {
    acc += plan.probabilities[i];
    plan.cumulative[i] = acc;
    if (plan.probabilities[i] > 0.0) last_positive = i;
  }
  // Every uniform draw in [0, 1) must land, regardless of how the prefix
  // sums rounded. Entries past the last positive row are all equal to the
  // total, so forcing them to 1.0 cannot make a zero row drawable.
  for (std::size_t i = last_positive; i < plan.cumulative.size(); ++i) {
    plan.cumulative[i] = 1.0;
  }
  return plan;
}

std::uint64_t required_samples(std::size_t d, double epsilon, double delta) {
  if (d < 1) throw ParameterError("required_samples: d must be >= 1");
  detail::require_open_unit(epsilon, "epsilon");
  detail::require_open_unit(delta, "delta");
  const double v = std::ceil(4.0 * static_cast<double>(d) / (epsilon * epsilon) *
                             std::log(2.0 * static_cast<double>(d) / delta));
  if (v > 9.0e18) {
    throw NumericalError("required_samples: count overflows a 64-bit integer");
  }
  return v < 1.0 ? 1 : static_cast<std::uint64_t>(v);
}

SketchParams SketchParams::from_tolerances(std::size_t d, double epsilon,
                                           double delta, std::uint64_t seed) {
  SketchParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  p.r = static_cast<std::size_t>(required_samples(d, epsilon, delta));
  p.seed = seed;
  return p;
}

std::size_t draw_index(const SamplingPlan& plan, double u) {
  const auto it = std::upper_bound(plan.cumulative.begin(),
                                   plan.cumulative.end(), u);
  if (it == plan.cumulative.end()) {
    return plan.cumulative.size() - 1;  // unreachable for u < 1
  }
  return static_cast<std::size_t>(it - plan.cumulative.begin());
}

Matrix draw_sketch(const Matrix& m, const SamplingPlan& plan,
                   const SketchParams& params) {
  if (plan.source_rows != m.n_rows() ||
      plan.probabilities.size() != m.n_rows()) {
    throw ParameterError("draw_sketch: plan was not built from this matrix");
  }
  const std::size_t r = params.r;
  if (r < 1) throw ParameterError("draw_sketch: r must be >= 1");
  const std::size_t d = m.n_cols();

  // Indices are drawn serially so the sketch is a pure function of the seed;
  // row materialization below is parallel.
  std::vector<std::size_t> picked(r);
  Vector scale(r);
  Rng rng(params.seed);
  const double rd = static_cast<double>(r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t i = draw_index(plan, rng.uniform01());
    picked[k] = i;
    scale[k] = 1.0 / std::sqrt(rd * plan.probabilities[i]);
  }

  if (!m.is_sparse()) {
    const double* src = m.dense_values().data();
    Vector out(r * d);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(r); ++k) {
      const double* row = src + picked[k] * d;
      const double s = scale[k];
      double* dst = out.data() + static_cast<std::size_t>(k) * d;
      for (std::size_t j = 0; j < d; ++j) dst[j] = row[j] * s;
    }
    return Matrix::dense(r, d, std::move(out));
  }

  const auto& row_ptr = m.row_ptr();
  const auto& col_idx = m.col_idx();
  const auto& val = m.values();
  std::vector<std::size_t> out_ptr(r + 1, 0);
  for (std::size_t k = 0; k < r; ++k) {
    out_ptr[k + 1] = out_ptr[k] + (row_ptr[picked[k] + 1] - row_ptr[picked[k]]);
  }
  std::vector<std::size_t> out_idx(out_ptr[r]);
  Vector out_val(out_ptr[r]);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(r); ++k) {
    const std::size_t i = picked[k];
    const double s = scale[k];
    std::size_t pos = out_ptr[k];
    for (std::size_t q = row_ptr[i]; q < row_ptr[i + 1]; ++q, ++pos) {
      out_idx[pos] = col_idx[q];
      out_val[pos] = val[q] * s;
    }
  }
  return Matrix::from_csr(r, d, std::move(out_ptr), std::move(out_idx),
                          std::move(out_val));
}

}  // namespace specnorm
