#pragma once

#include <cstddef>
#include <vector>

#include "specnorm/errors.hpp"

namespace specnorm {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

// Dense row-major or CSR matrix, immutable after construction. Sparse
// matrices also carry the CSR of their transpose so that A^T x runs as a
// race-free row-parallel gather instead of a scatter.
//
// Construction sums duplicate (row, col) entries and drops exact zeros, so
// stored sparse values are always nonzero and column indices within a row
// are strictly increasing.
class Matrix {
 public:
  static Matrix dense(std::size_t n_rows, std::size_t n_cols, Vector values);
  static Matrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                              std::vector<Triplet> entries);
  // Takes an already-valid CSR layout (sorted, in-range columns; nonzero
  // values); validated in O(nnz).
  static Matrix from_csr(std::size_t n_rows, std::size_t n_cols,
                         std::vector<std::size_t> row_ptr,
                         std::vector<std::size_t> col_idx, Vector values);

  std::size_t n_rows() const { return rows_; }
  std::size_t n_cols() const { return cols_; }
  bool is_sparse() const { return sparse_; }
  std::size_t nnz() const { return nnz_; }
  double frobenius_sq() const { return frobenius_sq_; }

  Vector matvec(const Vector& x) const;
  Vector matvec_t(const Vector& x) const;    // A^T x
  Vector gram_apply(const Vector& x) const;  // A^T (A x); A^T A never formed
  Vector row_norms_squared() const;

  Matrix transposed() const;
  // Returns the transpose when n_cols > n_rows, otherwise a copy. The
  // spectral norm is invariant either way.
  Matrix transpose_if_wide() const;
  Matrix densified() const;

  double at(std::size_t i, std::size_t j) const;

  // CSR views (sparse matrices only).
  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::size_t>& col_idx() const { return col_idx_; }
  const Vector& values() const { return val_; }
  // Row-major storage view (dense matrices only).
  const Vector& dense_values() const { return dense_; }

 private:
  Matrix() = default;
  void finalize();

  std::size_t rows_ = 0, cols_ = 0;
  bool sparse_ = false;
  Vector dense_;  // row-major, dense only
  std::vector<std::size_t> row_ptr_, col_idx_;  // CSR, sparse only
  Vector val_;
  std::vector<std::size_t> t_row_ptr_, t_col_idx_;  // CSR of A^T
  Vector t_val_;
  std::size_t nnz_ = 0;
  double frobenius_sq_ = 0.0;
};

}  // namespace specnorm
