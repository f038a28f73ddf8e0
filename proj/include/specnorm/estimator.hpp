#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "specnorm/matrix.hpp"

namespace specnorm {

enum class Method { kAuto, kSketch, kDirect, kExact };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct EstimateRequest {
  double epsilon = 0.1;
  double delta = 0.05;
  Method method = Method::kAuto;
  std::uint64_t seed = 0;
};

// Cost comparison behind method=auto. direct_cost mirrors the
// (nnz/eps) log(d/(eps delta)) term; sketch_cost mirrors the
// (d^2/eps^3) log^2(d/(eps delta)) term plus the n + r log r sketch
// construction cost.
struct CostModel {
  std::size_t nnz = 0;
  double direct_cost = 0.0;
  double sketch_cost = 0.0;
};

struct EstimateReport {
  double estimate_sq = 0.0;
  double effective_rank = 0.0;
  Method method_used = Method::kDirect;
  std::optional<std::size_t> r_used;
  std::size_t iterations_used = 0;
  std::uint64_t seed = 0;
  CostModel cost_model;
  bool degenerate = false;  // zero matrix input
};

Method choose_method(std::size_t nnz, std::size_t n, std::size_t d,
                     double epsilon, double delta);

// ||A||_F^2 / norm_sq; in [1, min(n, d)] when norm_sq is the exact squared
// spectral norm.
double effective_rank(const Matrix& m, double norm_sq);

// Top-level estimator. With probability at least 1 - delta the returned
// estimate_sq lies in [(1 - eps) ||A||^2, (1 + eps) ||A||^2]. The sketch
// path splits the budget as eps/2 for the sketch and eps/3 for the power
// stage, each with delta/2, which composes to the full guarantee.
EstimateReport estimate(const Matrix& m, const EstimateRequest& req);

}  // namespace specnorm
