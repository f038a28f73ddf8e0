#include "specnorm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

namespace specnorm::oracle {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t d) {
  double acc = 0.0;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) {
      acc += a[p * d + q] * a[p * d + q];
    }
  }
  return std::sqrt(2.0 * acc);
}

}  // namespace

std::vector<double> gram_matrix(const Matrix& m, std::size_t cap) {
  const std::size_t d = m.n_cols();
  if (d > cap) {
    throw NumericalError("oracle restricted to desk scale: d=" +
                         std::to_string(d) + " exceeds cap " +
                         std::to_string(cap));
  }
  std::vector<double> g(d * d, 0.0);
  if (m.is_sparse()) {
    const auto& row_ptr = m.row_ptr();
    const auto& col_idx = m.col_idx();
    const auto& val = m.values();
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      for (std::size_t k1 = row_ptr[i]; k1 < row_ptr[i + 1]; ++k1) {
        for (std::size_t k2 = k1; k2 < row_ptr[i + 1]; ++k2) {
          g[col_idx[k1] * d + col_idx[k2]] += val[k1] * val[k2];
        }
      }
    }
  } else {
    const double* a = m.dense_values().data();
    const std::size_t n = m.n_rows();
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(d); ++j) {
      for (std::size_t k = static_cast<std::size_t>(j); k < d; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += a[i * d + j] * a[i * d + k];
        g[static_cast<std::size_t>(j) * d + k] = acc;
      }
    }
  }
  // Mirror the upper triangle; the result is exactly symmetric.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) g[k * d + j] = g[j * d + k];
  }
  return g;
}

SpectrumResult jacobi_eigenvalues(std::vector<double> a, std::size_t d) {
  if (d < 1 || a.size() != d * d) {
    throw ParameterError("jacobi_eigenvalues: matrix must be d x d with d >= 1");
  }
  double total_sq = 0.0;
  for (double v : a) total_sq += v * v;
  const double threshold = 1e-12 * std::sqrt(total_sq);

  for (std::size_t sweep = 0;; ++sweep) {
    const double off = off_diagonal_norm(a, d);
    if (off <= threshold) {
      SpectrumResult result;
      result.sweeps_used = sweep;
      result.off_diag_norm = off;
      result.eigenvalues.resize(d);
      for (std::size_t i = 0; i < d; ++i) result.eigenvalues[i] = a[i * d + i];
      std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
                std::greater<double>());
      return result;
    }
    if (sweep >= kMaxSweeps) {
      throw NumericalError(
          "jacobi eigensolver did not converge after " +
          std::to_string(kMaxSweeps) +
          " sweeps; off-diagonal norm " + std::to_string(off));
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a[p * d + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double t =
            sign / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * d + p] -= t * apq;
        a[q * d + q] += t * apq;
        a[p * d + q] = a[q * d + p] = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * d + p];
          const double arq = a[r * d + q];
          a[r * d + p] = a[p * d + r] = arp - s * (arq + tau * arp);
          a[r * d + q] = a[q * d + r] = arq + s * (arp - tau * arq);
        }
      }
    }
  }
}

SpectrumResult spectrum(const Matrix& m, std::size_t cap) {
  return jacobi_eigenvalues(gram_matrix(m, cap), m.n_cols());
}

double exact_norm_sq(const Matrix& m, std::size_t cap) {
  return spectrum(m, cap).eigenvalues.front();
}

double symmetric_spectral_norm(std::vector<double> sym, std::size_t d) {
  const SpectrumResult r = jacobi_eigenvalues(std::move(sym), d);
  return std::max(std::fabs(r.eigenvalues.front()),
                  std::fabs(r.eigenvalues.back()));
}

}  // namespace specnorm::oracle
