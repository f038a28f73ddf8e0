#pragma once

#include <cstddef>
#include <vector>

#include "specnorm/matrix.hpp"
#include "specnorm/rng.hpp"

namespace specnorm {

// Random test-matrix generators used by the Monte Carlo harness and the
// test suite.
enum class MatrixFamily { kGaussian, kPowerLaw, kDominantRow, kBoundaryGap };

const char* family_name(MatrixFamily f);

Matrix gaussian_matrix(std::size_t n, std::size_t d, Rng& rng);

// Dense n x k block with orthonormal columns (Gaussian draw followed by two
// passes of modified Gram-Schmidt), row-major.
std::vector<double> random_orthonormal_columns(std::size_t n, std::size_t k,
                                               Rng& rng);

// A = U diag(singular_values) V^T with random orthonormal U, V.
Matrix matrix_with_spectrum(std::size_t n, std::size_t d,
                            const std::vector<double>& singular_values,
                            Rng& rng);

// gap_eps only matters for kBoundaryGap, where sigma_2^2 = (1 - gap_eps)
// sigma_1^2 sits exactly on the acceptance boundary and the lower half of
// the spectrum falls strictly below it.
Matrix sample_family(MatrixFamily f, std::size_t n, std::size_t d,
                     double gap_eps, Rng& rng);

}  // namespace specnorm
