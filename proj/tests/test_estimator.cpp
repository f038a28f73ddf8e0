#include <doctest.h>

#include <cmath>
#include <vector>

#include "specnorm/estimator.hpp"
#include "specnorm/families.hpp"
#include "specnorm/matrix.hpp"
#include "specnorm/oracle.hpp"
#include "test_util.hpp"

using specnorm::choose_method;
using specnorm::effective_rank;
using specnorm::estimate;
using specnorm::EstimateRequest;
using specnorm::Matrix;
using specnorm::Method;
using specnorm::ParameterError;
using specnorm::Vector;

namespace {

Matrix identity(std::size_t d) {
  std::vector<specnorm::Triplet> t;
  for (std::size_t i = 0; i < d; ++i) t.push_back({i, i, 1.0});
  return Matrix::from_triplets(d, d, t);
}

Matrix scaled(const Matrix& m, double c) {
  Vector values = m.densified().dense_values();
  for (double& v : values) v *= c;
  return Matrix::dense(m.n_rows(), m.n_cols(), values);
}

}  // namespace

TEST_CASE("effective rank of closed forms") {
  CHECK(effective_rank(identity(7), 1.0) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(effective_rank(Matrix::dense(2, 2, {2, 0, 0, 1}), 4.0) ==
        doctest::Approx(1.25).epsilon(1e-14));

  specnorm::Rng rng(3);
  Vector u(9), v(4);
  for (double& w : u) w = rng.normal();
  for (double& w : v) w = rng.normal();
  Vector a(9 * 4);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 4; ++j) a[i * 4 + j] = u[i] * v[j];
  }
  const Matrix rank1 = Matrix::dense(9, 4, a);
  const double norm_sq = specnorm::dot(u, u) * specnorm::dot(v, v);
  CHECK(effective_rank(rank1, norm_sq) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(effective_rank(identity(2), 0.0), ParameterError);
  CHECK_THROWS_AS(effective_rank(identity(2), -1.0), ParameterError);
}

TEST_CASE("cost model picks the cheaper route") {
  // dense square: the nnz-based term wins
  CHECK(choose_method(1000000, 1000, 1000, 0.1, 0.1) == Method::kDirect);
  // very tall sparse with small d: sketching wins
  CHECK(choose_method(10000000, 1000000, 10, 0.1, 0.1) == Method::kSketch);
  // degenerate dimension still yields a valid choice
  const Method m = choose_method(5, 5, 1, 0.1, 0.1);
  CHECK((m == Method::kDirect || m == Method::kSketch));
  CHECK_THROWS_AS(choose_method(5, 5, 1, 1.5, 0.1), ParameterError);
}

TEST_CASE("identity estimates are exact") {
  EstimateRequest req;
  req.seed = 17;
  const auto rep = estimate(identity(8), req);
  CHECK(rep.estimate_sq == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.effective_rank == doctest::Approx(8.0).epsilon(1e-12));
  CHECK_FALSE(rep.degenerate);
}

TEST_CASE("exact method matches the closed form and the oracle") {
  EstimateRequest req;
  req.method = Method::kExact;
  req.seed = 1;
  const auto rep = estimate(Matrix::dense(2, 2, {1, 2, 3, 4}), req);
  CHECK(rep.estimate_sq == doctest::Approx(29.866068747318506).epsilon(1e-12));
  CHECK(rep.iterations_used == 0);
  CHECK_FALSE(rep.r_used.has_value());

  specnorm::Rng rng(9);
  for (int rep_i = 0; rep_i < 10; ++rep_i) {
    const Matrix m = testutil::random_sparse(35, 9, 0.3, rng);
    if (m.frobenius_sq() == 0.0) continue;
    req.seed = rng.next_u64();
    const auto r = estimate(m, req);
    CHECK(testutil::approx_rel(r.estimate_sq, specnorm::oracle::exact_norm_sq(m),
                               1e-9));
  }
}

TEST_CASE("zero matrix short-circuits to a degenerate report") {
  EstimateRequest req;
  const auto rep = estimate(Matrix::dense(3, 3, Vector(9, 0.0)), req);
  CHECK(rep.degenerate);
  CHECK(rep.estimate_sq == 0.0);
  CHECK(rep.effective_rank == 0.0);
  CHECK(rep.iterations_used == 0);
}

TEST_CASE("requests validate their tolerances") {
  EstimateRequest req;
  req.epsilon = 0.0;
  CHECK_THROWS_AS(estimate(identity(2), req), ParameterError);
  req.epsilon = 0.1;
  req.delta = 1.0;
  CHECK_THROWS_AS(estimate(identity(2), req), ParameterError);
}

// Doubling the matrix leaves the sampling probabilities and iterate
// directions bitwise unchanged, so the estimate scales by exactly 4.
TEST_CASE("estimates scale exactly under power-of-two scaling") {
  specnorm::Rng rng(19);
  for (const Method method : {Method::kDirect, Method::kSketch}) {
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
      const Matrix m = specnorm::gaussian_matrix(30, 5, rng);
      const Matrix m2 = scaled(m, 2.0);
      EstimateRequest req;
      req.epsilon = 0.3;
      req.delta = 0.2;
      req.method = method;
      req.seed = rng.next_u64();
      const auto r1 = estimate(m, req);
      const auto r2 = estimate(m2, req);
      CHECK(r2.estimate_sq == 4.0 * r1.estimate_sq);
      CHECK(r2.iterations_used == r1.iterations_used);
    }
  }
}

TEST_CASE("estimates scale to rounding under arbitrary scaling") {
  specnorm::Rng rng(23);
  const Matrix m = specnorm::gaussian_matrix(25, 6, rng);
  const Matrix m3 = scaled(m, 3.0);
  EstimateRequest req;
  req.method = Method::kDirect;
  req.epsilon = 0.2;
  req.delta = 0.1;
  req.seed = 777;
  const auto r1 = estimate(m, req);
  const auto r2 = estimate(m3, req);
  CHECK(testutil::approx_rel(r2.estimate_sq, 9.0 * r1.estimate_sq, 1e-12));
}

TEST_CASE("transposed matrices land in the same acceptance interval") {
  specnorm::Rng rng(29);
  const double eps = 0.2, delta = 0.05;
  for (int rep_i = 0; rep_i < 10; ++rep_i) {
    const Matrix m = specnorm::gaussian_matrix(30, 7, rng);
    const double sigma1_sq = specnorm::oracle::exact_norm_sq(m);
    EstimateRequest req;
    req.epsilon = eps;
    req.delta = delta;
    req.seed = rng.next_u64();
    const auto r1 = estimate(m, req);
    const auto r2 = estimate(m.transposed(), req);
    for (const double v : {r1.estimate_sq, r2.estimate_sq}) {
      CHECK(v >= (1.0 - eps) * sigma1_sq);
      CHECK(v <= (1.0 + eps) * sigma1_sq);
    }
  }
}

TEST_CASE("reports are deterministic") {
  specnorm::Rng rng(31);
  const Matrix m = testutil::random_sparse(40, 6, 0.25, rng);
  EstimateRequest req;
  req.seed = 909;
  const auto r1 = estimate(m, req);
  const auto r2 = estimate(m, req);
  CHECK(r1.estimate_sq == r2.estimate_sq);
  CHECK(r1.effective_rank == r2.effective_rank);
  CHECK(r1.method_used == r2.method_used);
  CHECK(r1.iterations_used == r2.iterations_used);
}

TEST_CASE("forced sketch path stays in the acceptance interval") {
  const double eps = 0.5, delta = 0.2;
  const std::size_t trials = 100;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    specnorm::Rng rng(specnorm::derive_seed(4000, t));
    const Matrix m = specnorm::gaussian_matrix(300, 8, rng);
    const double sigma1_sq = specnorm::oracle::exact_norm_sq(m);
    EstimateRequest req;
    req.epsilon = eps;
    req.delta = delta;
    req.method = Method::kSketch;
    req.seed = rng.next_u64();
    const auto rep = estimate(m, req);
    CHECK(rep.r_used.has_value());
    if (rep.estimate_sq >= (1.0 - eps) * sigma1_sq &&
        rep.estimate_sq <= (1.0 + eps) * sigma1_sq) {
      ++hits;
    }
  }
  const double threshold =
      (1.0 - delta) - 3.0 * std::sqrt(delta * (1.0 - delta) / trials);
  CHECK(static_cast<double>(hits) / trials >= threshold);
}

TEST_CASE("auto method covers sparse inputs at the advertised rate") {
  const double eps = 0.1, delta = 0.05;
  const std::size_t trials = 400;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    specnorm::Rng rng(specnorm::derive_seed(8100, t));
    const Matrix m = testutil::random_sparse(500, 40, 0.1, rng);
    const double sigma1_sq = specnorm::oracle::exact_norm_sq(m);
    EstimateRequest req;
    req.epsilon = eps;
    req.delta = delta;
    req.seed = rng.next_u64();
    const auto rep = estimate(m, req);
    if (rep.estimate_sq >= (1.0 - eps) * sigma1_sq &&
        rep.estimate_sq <= (1.0 + eps) * sigma1_sq) {
      ++hits;
    }
  }
  const double threshold =
      (1.0 - delta) - 3.0 * std::sqrt(delta * (1.0 - delta) / trials);
  CHECK(static_cast<double>(hits) / trials >= threshold);
}

TEST_CASE("effective rank of the exact norm stays within [1, min(n, d)]") {
  specnorm::Rng rng(37);
  for (int rep_i = 0; rep_i < 15; ++rep_i) {
    const Matrix m = testutil::random_sparse(30, 11, 0.3, rng);
    if (m.frobenius_sq() == 0.0) continue;
    const double rho = effective_rank(m, specnorm::oracle::exact_norm_sq(m));
    CHECK(rho >= 1.0 - 1e-9);
    CHECK(rho <= 11.0 * (1.0 + 1e-9));
  }
}

TEST_CASE("method names round-trip") {
  CHECK(specnorm::method_from_name("auto") == Method::kAuto);
  CHECK(specnorm::method_from_name("sketch") == Method::kSketch);
  CHECK(specnorm::method_from_name("direct") == Method::kDirect);
  CHECK(specnorm::method_from_name("exact") == Method::kExact);
  CHECK_FALSE(specnorm::method_from_name("fancy").has_value());
  CHECK(std::string(specnorm::method_name(Method::kSketch)) == "sketch");
}
