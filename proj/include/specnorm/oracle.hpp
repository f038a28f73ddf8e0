#pragma once

#include <cstddef>
#include <vector>

#include "specnorm/matrix.hpp"

// Exact desk-scale reference: cyclic Jacobi sweeps on the d x d Gram matrix.
// Intentionally serial and O(d^3); it exists to give the randomized paths
// something trustworthy to be measured against.

namespace specnorm::oracle {

inline constexpr std::size_t kDefaultCap = 512;
inline constexpr std::size_t kMaxSweeps = 100;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // descending
  std::size_t sweeps_used = 0;
  double off_diag_norm = 0.0;
};

// Dense symmetric G = A^T A, row-major d x d. Errors when d exceeds the cap.
std::vector<double> gram_matrix(const Matrix& m, std::size_t cap = kDefaultCap);

// Eigenvalues of an arbitrary symmetric matrix (row-major, d x d). Sweeps
// until the off-diagonal Frobenius norm drops below 1e-12 times the total
// Frobenius norm.
SpectrumResult jacobi_eigenvalues(std::vector<double> sym, std::size_t d);

SpectrumResult spectrum(const Matrix& m, std::size_t cap = kDefaultCap);

// Largest eigenvalue of A^T A, i.e. the squared spectral norm of A.
double exact_norm_sq(const Matrix& m, std::size_t cap = kDefaultCap);

// Spectral norm (largest absolute eigenvalue) of a symmetric matrix.
double symmetric_spectral_norm(std::vector<double> sym, std::size_t d);

}  // namespace specnorm::oracle
