#pragma once

#include <cstddef>

// Low-level array kernels. The default entry points are OpenMP-parallel;
// specnorm::kernels::ref holds serial implementations with identical loop
// order, kept as the reference that the tests and the benchmark compare
// against. Every output element is accumulated serially by exactly one
// thread, so parallel and serial results are bitwise identical for any
// thread count.

namespace specnorm::kernels {

// y = A x for dense row-major A (n_rows x n_cols).
void dense_matvec(const double* a, std::size_t n_rows, std::size_t n_cols,
                  const double* x, double* y);

// y = A^T x for dense row-major A; y has n_cols entries.
void dense_matvec_t(const double* a, std::size_t n_rows, std::size_t n_cols,
                    const double* x, double* y);

// y = A x for CSR A. A^T x runs through the same kernel on the stored
// transpose, keeping the scatter-free gather form.
void csr_matvec(const std::size_t* row_ptr, const std::size_t* col_idx,
                const double* values, std::size_t n_rows, const double* x,
                double* y);

// out[i] = squared Euclidean norm of row i.
void dense_row_norms_sq(const double* a, std::size_t n_rows, std::size_t n_cols,
                        double* out);
void csr_row_norms_sq(const std::size_t* row_ptr, const double* values,
                      std::size_t n_rows, double* out);

namespace ref {

void dense_matvec(const double* a, std::size_t n_rows, std::size_t n_cols,
                  const double* x, double* y);
void dense_matvec_t(const double* a, std::size_t n_rows, std::size_t n_cols,
                    const double* x, double* y);
void csr_matvec(const std::size_t* row_ptr, const std::size_t* col_idx,
                const double* values, std::size_t n_rows, const double* x,
                double* y);
void dense_row_norms_sq(const double* a, std::size_t n_rows, std::size_t n_cols,
                        double* out);
void csr_row_norms_sq(const std::size_t* row_ptr, const double* values,
                      std::size_t n_rows, double* out);

}  // namespace ref

}  // namespace specnorm::kernels
