#include "specnorm/kernels.hpp"

#include <cstdint>

namespace specnorm::kernels {

void dense_matvec(const double* a, std::size_t n_rows, std::size_t n_cols,
                  const double* x, double* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_rows); ++i) {
    const double* row = a + static_cast<std::size_t>(i) * n_cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void dense_matvec_t(const double* a, std::size_t n_rows, std::size_t n_cols,
                    const double* x, double* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(n_cols); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n_rows; ++i) {
      acc += a[i * n_cols + static_cast<std::size_t>(j)] * x[i];
    }
    y[j] = acc;
  }
}

void csr_matvec(const std::size_t* row_ptr, const std::size_t* col_idx,
                const double* values, std::size_t n_rows, const double* x,
                double* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_rows); ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      acc += values[k] * x[col_idx[k]];
    }
    y[i] = acc;
  }
}

void dense_row_norms_sq(const double* a, std::size_t n_rows, std::size_t n_cols,
                        double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_rows); ++i) {
    const double* row = a + static_cast<std::size_t>(i) * n_cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_cols; ++j) acc += row[j] * row[j];
    out[i] = acc;
  }
}

void csr_row_norms_sq(const std::size_t* row_ptr, const double* values,
                      std::size_t n_rows, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_rows); ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      acc += values[k] * values[k];
    }
    out[i] = acc;
  }
}

namespace ref {

void dense_matvec(const double* a, std::size_t n_rows, std::size_t n_cols,
                  const double* x, double* y) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double* row = a + i * n_cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void dense_matvec_t(const double* a, std::size_t n_rows, std::size_t n_cols,
                    const double* x, double* y) {
  for (std::size_t j = 0; j < n_cols; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n_rows; ++i) acc += a[i * n_cols + j] * x[i];
    y[j] = acc;
  }
}

void csr_matvec(const std::size_t* row_ptr, const std::size_t* col_idx,
                const double* values, std::size_t n_rows, const double* x,
                double* y) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      acc += values[k] * x[col_idx[k]];
    }
    y[i] = acc;
  }
}

void dense_row_norms_sq(const double* a, std::size_t n_rows, std::size_t n_cols,
                        double* out) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double* row = a + i * n_cols;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_cols; ++j) acc += row[j] * row[j];
    out[i] = acc;
  }
}

void csr_row_norms_sq(const std::size_t* row_ptr, const double* values,
                      std::size_t n_rows, double* out) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      acc += values[k] * values[k];
    }
    out[i] = acc;
  }
}

}  // namespace ref

}  // namespace specnorm::kernels
