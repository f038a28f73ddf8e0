#include "specnorm/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace specnorm {

const char* family_name(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::kGaussian: return "gaussian";
    case MatrixFamily::kPowerLaw: return "power_law";
    case MatrixFamily::kDominantRow: return "dominant_row";
    case MatrixFamily::kBoundaryGap: return "boundary_gap";
  }
  return "unknown";
}

Matrix gaussian_matrix(std::size_t n, std::size_t d, Rng& rng) {
  Vector values(n * d);
  for (double& v : values) v = rng.normal();
  return Matrix::dense(n, d, std::move(values));
}

std::vector<double> random_orthonormal_columns(std::size_t n, std::size_t k,
                                               Rng& rng) {
  if (k > n) throw ParameterError("random_orthonormal_columns: k must be <= n");
  std::vector<double> q(n * k);
  for (double& v : q) v = rng.normal();
  auto col = [&](std::size_t j, std::size_t i) -> double& { return q[i * k + j]; };
  for (std::size_t j = 0; j < k; ++j) {
    // Two orthogonalization passes keep the columns orthonormal to roughly
    // machine precision even for unlucky draws.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < j; ++prev) {
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += col(prev, i) * col(j, i);
        for (std::size_t i = 0; i < n; ++i) col(j, i) -= proj * col(prev, i);
      }
    }
    double nrm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm_sq += col(j, i) * col(j, i);
    double nrm = std::sqrt(nrm_sq);
    while (nrm < 1e-8) {
      // Degenerate draw; refill the column and redo this index.
      for (std::size_t i = 0; i < n; ++i) col(j, i) = rng.normal();
      for (std::size_t prev = 0; prev < j; ++prev) {
        double proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += col(prev, i) * col(j, i);
        for (std::size_t i = 0; i < n; ++i) col(j, i) -= proj * col(prev, i);
      }
      nrm_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) nrm_sq += col(j, i) * col(j, i);
      nrm = std::sqrt(nrm_sq);
    }
    for (std::size_t i = 0; i < n; ++i) col(j, i) /= nrm;
  }
  return q;
}

Matrix matrix_with_spectrum(std::size_t n, std::size_t d,
                            const std::vector<double>& singular_values,
                            Rng& rng) {
  const std::size_t k = singular_values.size();
  if (k < 1 || k > std::min(n, d)) {
    throw ParameterError("matrix_with_spectrum: need 1 <= #values <= min(n, d)");
  }
  const std::vector<double> u = random_orthonormal_columns(n, k, rng);
  const std::vector<double> v = random_orthonormal_columns(d, k, rng);
  Vector a(n * d, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        acc += u[static_cast<std::size_t>(i) * k + t] * singular_values[t] *
               v[j * k + t];
      }
      a[static_cast<std::size_t>(i) * d + j] = acc;
    }
  }
  return Matrix::dense(n, d, std::move(a));
}

Matrix sample_family(MatrixFamily f, std::size_t n, std::size_t d,
                     double gap_eps, Rng& rng) {
  switch (f) {
    case MatrixFamily::kGaussian:
      return gaussian_matrix(n, d, rng);
    case MatrixFamily::kPowerLaw: {
      const std::size_t k = std::min(n, d);
      std::vector<double> sv(k);
      for (std::size_t i = 0; i < k; ++i) sv[i] = 1.0 / static_cast<double>(i + 1);
      return matrix_with_spectrum(n, d, sv, rng);
    }
    case MatrixFamily::kDominantRow: {
      Matrix g = gaussian_matrix(n, d, rng);
      Vector values = g.dense_values();
      for (std::size_t j = 0; j < d; ++j) values[j] *= 25.0;
      return Matrix::dense(n, d, std::move(values));
    }
    case MatrixFamily::kBoundaryGap: {
      detail::require_open_unit(gap_eps, "gap_eps");
      const std::size_t k = std::min(n, d);
      std::vector<double> sv(k);
      sv[0] = 1.0;
      const double boundary = std::sqrt(1.0 - gap_eps);
      for (std::size_t i = 1; i < k; ++i) {
        // Upper half of the tail sits exactly on the boundary, the rest
        // strictly below it, so both sides of the partition are populated.
        sv[i] = (i <= k / 2 || k == 2) ? boundary : 0.5 * boundary;
      }
      if (k == 1) sv[0] = 1.0;
      return matrix_with_spectrum(n, d, sv, rng);
    }
  }
  throw ParameterError("sample_family: unknown family");
}

}  // namespace specnorm
