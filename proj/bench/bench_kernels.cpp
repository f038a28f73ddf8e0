// Times the OpenMP kernels against the serial reference implementations and
// checks that both produce identical results.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specnorm/kernels.hpp"
#include "specnorm/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_best_ms(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int rep = 0; rep < reps; ++rep) {
    const auto t0 = Clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::fabs(a[i] - b[i]));
  }
  return m;
}

void report(const char* name, double serial_ms, double parallel_ms, double diff) {
  std::printf("%-22s %10.3f ms %10.3f ms   x%-6.2f   max|diff|=%g\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 4000;
  std::size_t d = 800;
  double density = 0.02;
  int reps = 5;
  if (argc > 1) n = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) d = std::strtoull(argv[2], nullptr, 10);
  if (argc > 3) density = std::strtod(argv[3], nullptr);
  if (argc > 4) reps = std::atoi(argv[4]);

#ifdef _OPENMP
  std::printf("n=%zu d=%zu density=%g reps=%d threads=%d\n", n, d, density,
              reps, omp_get_max_threads());
#else
  std::printf("n=%zu d=%zu density=%g reps=%d (OpenMP disabled)\n", n, d,
              density, reps);
#endif

  specnorm::Rng rng(1);
  std::vector<double> dense(n * d);
  for (double& v : dense) v = rng.normal();
  std::vector<double> x(d), xt(n);
  for (double& v : x) v = rng.normal();
  for (double& v : xt) v = rng.normal();

  // Random CSR with ~density * n * d nonzeros.
  std::vector<std::size_t> row_ptr(n + 1, 0), col_idx;
  std::vector<double> values;
  const std::size_t per_row = std::max<std::size_t>(1, static_cast<std::size_t>(density * d));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t col = static_cast<std::size_t>(rng.uniform01() * (d / per_row));
    for (std::size_t k = 0; k < per_row && col < d; ++k) {
      col_idx.push_back(col);
      values.push_back(rng.normal());
      col += 1 + static_cast<std::size_t>(rng.uniform01() * (d / per_row));
    }
    row_ptr[i + 1] = col_idx.size();
  }
  std::printf("csr nnz=%zu\n\n", values.size());

  namespace K = specnorm::kernels;
  std::vector<double> y1(n), y2(n), z1(d), z2(d);

  double s_ms = time_best_ms(reps, [&] { K::ref::dense_matvec(dense.data(), n, d, x.data(), y1.data()); });
  double p_ms = time_best_ms(reps, [&] { K::dense_matvec(dense.data(), n, d, x.data(), y2.data()); });
  report("dense_matvec", s_ms, p_ms, max_abs_diff(y1, y2));

  s_ms = time_best_ms(reps, [&] { K::ref::dense_matvec_t(dense.data(), n, d, xt.data(), z1.data()); });
  p_ms = time_best_ms(reps, [&] { K::dense_matvec_t(dense.data(), n, d, xt.data(), z2.data()); });
  report("dense_matvec_t", s_ms, p_ms, max_abs_diff(z1, z2));

  s_ms = time_best_ms(reps, [&] { K::ref::csr_matvec(row_ptr.data(), col_idx.data(), values.data(), n, x.data(), y1.data()); });
  p_ms = time_best_ms(reps, [&] { K::csr_matvec(row_ptr.data(), col_idx.data(), values.data(), n, x.data(), y2.data()); });
  report("csr_matvec", s_ms, p_ms, max_abs_diff(y1, y2));

  s_ms = time_best_ms(reps, [&] { K::ref::dense_row_norms_sq(dense.data(), n, d, y1.data()); });
  p_ms = time_best_ms(reps, [&] { K::dense_row_norms_sq(dense.data(), n, d, y2.data()); });
  report("dense_row_norms_sq", s_ms, p_ms, max_abs_diff(y1, y2));

  s_ms = time_best_ms(reps, [&] { K::ref::csr_row_norms_sq(row_ptr.data(), values.data(), n, y1.data()); });
  p_ms = time_best_ms(reps, [&] { K::csr_row_norms_sq(row_ptr.data(), values.data(), n, y2.data()); });
  report("csr_row_norms_sq", s_ms, p_ms, max_abs_diff(y1, y2));

  return 0;
}
