#pragma once

#include <iosfwd>
#include <string>

#include "specnorm/matrix.hpp"

namespace specnorm {

enum class MatrixFormat { kMatrixMarket, kDenseCsv };

Matrix read_matrix(const std::string& path, MatrixFormat format);

// Matrix Market exchange format: coordinate and array, field real or
// integer, symmetry general or symmetric (symmetric entries are expanded).
// Complex, pattern, skew-symmetric and hermitian files are rejected with an
// explicit error. Parse errors carry the offending line number.
Matrix read_matrix_market(std::istream& in);

// Comma-separated rows of a dense matrix.
Matrix read_dense_csv(std::istream& in);

// Coordinate format for sparse matrices, array format for dense ones.
// Values are printed as shortest round-trip decimals, so write followed by
// read reproduces the matrix exactly.
void write_matrix_market(const Matrix& m, std::ostream& out);
void write_matrix_market(const Matrix& m, const std::string& path);

}  // namespace specnorm
