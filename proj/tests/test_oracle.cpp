#include <doctest.h>

#include <cmath>
#include <vector>

#include "specnorm/families.hpp"
#include "specnorm/matrix.hpp"
#include "specnorm/oracle.hpp"
#include "specnorm/power.hpp"
#include "test_util.hpp"

using specnorm::Matrix;
namespace oracle = specnorm::oracle;

TEST_CASE("gram matrix of small cases") {
  const Matrix i3 = Matrix::dense(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(oracle::gram_matrix(i3) ==
        std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 1});

  const Matrix a = Matrix::dense(2, 2, {1, 2, 3, 4});
  CHECK(oracle::gram_matrix(a) == std::vector<double>{10, 14, 14, 20});

  const Matrix row = Matrix::dense(1, 2, {3, 4});
  CHECK(oracle::gram_matrix(row) == std::vector<double>{9, 12, 12, 16});
}

TEST_CASE("gram matrix honors the size cap") {
  std::vector<specnorm::Triplet> t{{0, 512, 1.0}};
  const Matrix wide = Matrix::from_triplets(1, 513, t);
  CHECK_THROWS_AS(oracle::gram_matrix(wide), specnorm::NumericalError);
  const Matrix small = Matrix::dense(1, 2, {1, 1});
  CHECK_THROWS_AS(oracle::gram_matrix(small, 1), specnorm::NumericalError);
}

TEST_CASE("exact norm of closed-form cases") {
  const Matrix diag21 = Matrix::dense(2, 2, {2, 0, 0, 1});
  CHECK(oracle::exact_norm_sq(diag21) == doctest::Approx(4.0).epsilon(1e-12));

  const Matrix a = Matrix::dense(2, 2, {1, 2, 3, 4});
  // largest eigenvalue of [[10,14],[14,20]] = (30 + sqrt(884)) / 2
  CHECK(oracle::exact_norm_sq(a) ==
        doctest::Approx(29.866068747318506).epsilon(1e-12));

  specnorm::Rng rng(3);
  const std::size_t d = 12;
  const std::vector<double> q = specnorm::random_orthonormal_columns(d, d, rng);
  const Matrix orth = Matrix::dense(d, d, q);
  CHECK(oracle::exact_norm_sq(orth) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("eigenvalue sum preserves the trace") {
  specnorm::Rng rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix m = testutil::random_sparse(30, 10, 0.4, rng);
    const auto sr = oracle::spectrum(m);
    double sum = 0.0;
    for (double ev : sr.eigenvalues) sum += ev;
    CHECK(testutil::approx_rel(sum, m.frobenius_sq(), 1e-9));
    CHECK(sr.eigenvalues.back() >= -1e-10 * sr.eigenvalues.front());
  }
}

TEST_CASE("spectral norm is invariant under orthogonal row mixing") {
  specnorm::Rng rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    const std::size_t n = 20, d = 7;
    const Matrix a = specnorm::gaussian_matrix(n, d, rng);
    const std::vector<double> q = specnorm::random_orthonormal_columns(n, n, rng);
    const std::vector<double> qa =
        testutil::dense_matmul(q, n, n, a.dense_values(), d);
    const Matrix rotated = Matrix::dense(n, d, qa);
    CHECK(testutil::approx_rel(oracle::exact_norm_sq(rotated),
                               oracle::exact_norm_sq(a), 1e-8));
  }
}

TEST_CASE("oracle agrees with a long power iteration on separated spectra") {
  specnorm::Rng rng(31);
  for (int rep = 0; rep < 3; ++rep) {
    const Matrix m =
        specnorm::sample_family(specnorm::MatrixFamily::kPowerLaw, 40, 10, 0.5, rng);
    specnorm::PowerParams pp;
    pp.max_iterations = 10 * specnorm::iteration_count(10, 0.1, 0.1);
    pp.seed = rng.next_u64();
    const auto est = specnorm::estimate_norm_sq(m, pp);
    CHECK(testutil::approx_rel(est.estimate_sq, oracle::exact_norm_sq(m), 1e-6));
  }
}

TEST_CASE("jacobi handles indefinite symmetric matrices") {
  const auto sr = oracle::jacobi_eigenvalues({0, 1, 1, 0}, 2);
  CHECK(sr.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sr.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(oracle::symmetric_spectral_norm({0, 1, 1, 0}, 2) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("jacobi handles the zero matrix and d=1") {
  const auto sr = oracle::jacobi_eigenvalues({0, 0, 0, 0}, 2);
  CHECK(sr.eigenvalues == std::vector<double>{0.0, 0.0});
  CHECK(sr.sweeps_used == 0);
  CHECK(oracle::jacobi_eigenvalues({5.0}, 1).eigenvalues ==
        std::vector<double>{5.0});
}
