#include "specnorm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "specnorm/kernels.hpp"

namespace specnorm {

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw ParameterError("dot: vectors have different lengths");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

namespace {

void check_shape(std::size_t n_rows, std::size_t n_cols) {
  if (n_rows < 1 || n_cols < 1) {
    throw ParameterError("matrix must have at least one row and one column");
  }
}

}  // namespace

Matrix Matrix::dense(std::size_t n_rows, std::size_t n_cols, Vector values) {
  check_shape(n_rows, n_cols);
  if (values.size() != n_rows * n_cols) {
    throw ParameterError("dense: expected " + std::to_string(n_rows * n_cols) +
                         " values, got " + std::to_string(values.size()));
  }
  Matrix m;
  m.rows_ = n_rows;
  m.cols_ = n_cols;
  m.sparse_ = false;
  m.dense_ = std::move(values);
  m.finalize();
  return m;
}

Matrix Matrix::from_triplets(std::size_t n_rows, std::size_t n_cols,
                             std::vector<Triplet> entries) {
  check_shape(n_rows, n_cols);
  for (const Triplet& t : entries) {
    if (t.row >= n_rows || t.col >= n_cols) {
      throw ParameterError("from_triplets: entry (" + std::to_string(t.row) +
                           ", " + std::to_string(t.col) + ") outside " +
                           std::to_string(n_rows) + "x" + std::to_string(n_cols));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });

  Matrix m;
  m.rows_ = n_rows;
  m.cols_ = n_cols;
  m.sparse_ = true;
  m.row_ptr_.assign(n_rows + 1, 0);
  m.col_idx_.reserve(entries.size());
  m.val_.reserve(entries.size());

  std::size_t k = 0;
  for (std::size_t i = 0; i < n_rows; ++i) {
    while (k < entries.size() && entries[k].row == i) {
      double v = entries[k].value;
      const std::size_t col = entries[k].col;
      ++k;
      while (k < entries.size() && entries[k].row == i && entries[k].col == col) {
        v += entries[k].value;  // duplicates are summed
        ++k;
      }
      if (v != 0.0) {
        m.col_idx_.push_back(col);
        m.val_.push_back(v);
      }
    }
    m.row_ptr_[i + 1] = m.col_idx_.size();
  }
  m.finalize();
  return m;
}

Matrix Matrix::from_csr(std::size_t n_rows, std::size_t n_cols,
                        std::vector<std::size_t> row_ptr,
                        std::vector<std::size_t> col_idx, Vector values) {
  check_shape(n_rows, n_cols);
  if (row_ptr.size() != n_rows + 1 || row_ptr.front() != 0 ||
      row_ptr.back() != col_idx.size() || col_idx.size() != values.size()) {
    throw ParameterError("from_csr: inconsistent CSR layout");
  }
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (row_ptr[i] > row_ptr[i + 1]) {
      throw ParameterError("from_csr: row offsets must be nondecreasing");
    }
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      if (col_idx[k] >= n_cols) {
        throw ParameterError("from_csr: column index out of range");
      }
      if (k > row_ptr[i] && col_idx[k - 1] >= col_idx[k]) {
        throw ParameterError("from_csr: column indices must increase within a row");
      }
      if (values[k] == 0.0) {
        throw ParameterError("from_csr: stored values must be nonzero");
      }
    }
  }
  Matrix m;
  m.rows_ = n_rows;
  m.cols_ = n_cols;
  m.sparse_ = true;
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  m.val_ = std::move(values);
  m.finalize();
  return m;
}

void Matrix::finalize() {
  if (sparse_) {
    nnz_ = val_.size();
    // CSR of the transpose by counting sort over columns.
    t_row_ptr_.assign(cols_ + 1, 0);
    for (std::size_t c : col_idx_) ++t_row_ptr_[c + 1];
    for (std::size_t c = 0; c < cols_; ++c) t_row_ptr_[c + 1] += t_row_ptr_[c];
    t_col_idx_.resize(nnz_);
    t_val_.resize(nnz_);
    std::vector<std::size_t> cursor(t_row_ptr_.begin(), t_row_ptr_.end() - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        const std::size_t pos = cursor[col_idx_[k]]++;
        t_col_idx_[pos] = i;
        t_val_[pos] = val_[k];
      }
    }
  } else {
    nnz_ = 0;
    for (double v : dense_) {
      if (v != 0.0) ++nnz_;
    }
  }
  // Serial sum of the per-row norms keeps the result independent of the
  // thread count.
  const Vector rn = row_norms_squared();
  double acc = 0.0;
  for (double v : rn) acc += v;
  frobenius_sq_ = acc;
}

Vector Matrix::matvec(const Vector& x) const {
  if (x.size() != cols_) {
    throw ParameterError("matvec: x has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(cols_));
  }
  Vector y(rows_);
  if (sparse_) {
    kernels::csr_matvec(row_ptr_.data(), col_idx_.data(), val_.data(), rows_,
                        x.data(), y.data());
  } else {
    kernels::dense_matvec(dense_.data(), rows_, cols_, x.data(), y.data());
  }
  return y;
}

Vector Matrix::matvec_t(const Vector& x) const {
  if (x.size() != rows_) {
    throw ParameterError("matvec_t: x has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(rows_));
  }
  Vector y(cols_);
  if (sparse_) {
    kernels::csr_matvec(t_row_ptr_.data(), t_col_idx_.data(), t_val_.data(),
                        cols_, x.data(), y.data());
  } else {
    kernels::dense_matvec_t(dense_.data(), rows_, cols_, x.data(), y.data());
  }
  return y;
}

Vector Matrix::gram_apply(const Vector& x) const { return matvec_t(matvec(x)); }

Vector Matrix::row_norms_squared() const {
  Vector out(rows_);
  if (sparse_) {
    kernels::csr_row_norms_sq(row_ptr_.data(), val_.data(), rows_, out.data());
  } else {
    kernels::dense_row_norms_sq(dense_.data(), rows_, cols_, out.data());
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix m;
  m.rows_ = cols_;
  m.cols_ = rows_;
  m.sparse_ = sparse_;
  if (sparse_) {
    m.row_ptr_ = t_row_ptr_;
    m.col_idx_ = t_col_idx_;
    m.val_ = t_val_;
  } else {
    m.dense_.resize(dense_.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        m.dense_[j * rows_ + i] = dense_[i * cols_ + j];
      }
    }
  }
  m.finalize();
  return m;
}

Matrix Matrix::transpose_if_wide() const {
  return cols_ > rows_ ? transposed() : *this;
}

Matrix Matrix::densified() const {
  if (!sparse_) return *this;
  Vector values(rows_ * cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      values[i * cols_ + col_idx_[k]] = val_[k];
    }
  }
  return Matrix::dense(rows_, cols_, std::move(values));
}

double Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw ParameterError("at: index out of range");
  }
  if (!sparse_) return dense_[i * cols_ + j];
  const auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return val_[static_cast<std::size_t>(it - col_idx_.begin())];
}

}  // namespace specnorm
