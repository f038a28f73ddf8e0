#include "specnorm/estimator.hpp"

#include <cmath>
#include <utility>

#include "specnorm/oracle.hpp"
#include "specnorm/power.hpp"
#include "specnorm/rng.hpp"
#include "specnorm/sketch.hpp"

namespace specnorm {

namespace {

constexpr std::uint64_t kSketchStream = 1;
constexpr std::uint64_t kPowerStream = 2;

CostModel make_cost_model(std::size_t nnz, std::size_t n, std::size_t d,
                          double epsilon, double delta) {
  CostModel cm;
  cm.nnz = nnz;
  const double l = std::log(static_cast<double>(d) / (epsilon * delta));
  cm.direct_cost = static_cast<double>(nnz) / epsilon * l;
  const double r = std::ceil(4.0 * static_cast<double>(d) / (epsilon * epsilon) *
                             std::log(2.0 * static_cast<double>(d) / delta));
  cm.sketch_cost = static_cast<double>(d) * static_cast<double>(d) /
                       (epsilon * epsilon * epsilon) * l * l +
                   static_cast<double>(n) + r * std::log(std::max(r, 1.0));
  return cm;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kSketch: return "sketch";
    case Method::kDirect: return "direct";
    case Method::kExact: return "exact";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "auto") return Method::kAuto;
  if (name == "sketch") return Method::kSketch;
  if (name == "direct") return Method::kDirect;
  if (name == "exact") return Method::kExact;
  return std::nullopt;
}

Method choose_method(std::size_t nnz, std::size_t n, std::size_t d,
                     double epsilon, double delta) {
  if (n < 1 || d < 1) throw ParameterError("choose_method: empty matrix shape");
  detail::require_open_unit(epsilon, "epsilon");
  detail::require_open_unit(delta, "delta");
  const CostModel cm = make_cost_model(nnz, n, d, epsilon, delta);
  return cm.direct_cost <= cm.sketch_cost ? Method::kDirect : Method::kSketch;
}

double effective_rank(const Matrix& m, double norm_sq) {
  if (!(norm_sq > 0.0)) {
    throw ParameterError("effective_rank: norm_sq must be positive");
  }
  return m.frobenius_sq() / norm_sq;
}

EstimateReport estimate(const Matrix& m, const EstimateRequest& req) {
  detail::require_open_unit(req.epsilon, "epsilon");
  detail::require_open_unit(req.delta, "delta");

  EstimateReport rep;
  rep.seed = req.seed;

  const Matrix work = m.transpose_if_wide();
  const std::size_t n = work.n_rows();
  const std::size_t d = work.n_cols();
  rep.cost_model = make_cost_model(work.nnz(), n, d, req.epsilon, req.delta);

  if (m.frobenius_sq() == 0.0) {
    rep.estimate_sq = 0.0;
    rep.effective_rank = 0.0;
    rep.degenerate = true;
    rep.method_used = req.method == Method::kAuto ? Method::kDirect : req.method;
    return rep;
  }

  Method method = req.method;
  if (method == Method::kAuto) {
    method = choose_method(work.nnz(), n, d, req.epsilon, req.delta);
  }
  rep.method_used = method;

  switch (method) {
    case Method::kExact:
      rep.estimate_sq = oracle::exact_norm_sq(work);
      break;
    case Method::kDirect: {
      PowerParams pp;
      pp.epsilon = req.epsilon;
      pp.delta = req.delta;
      pp.seed = derive_seed(req.seed, kPowerStream);
      const NormEstimate est = estimate_norm_sq(work, pp);
      rep.estimate_sq = est.estimate_sq;
      rep.iterations_used = est.state.iteration;
      break;
    }
    case Method::kSketch: {
      const SamplingPlan plan = make_plan(work);
      const SketchParams sp = SketchParams::from_tolerances(
          d, req.epsilon / 2.0, req.delta / 2.0,
          derive_seed(req.seed, kSketchStream));
      const Matrix sk = draw_sketch(work, plan, sp);
      rep.r_used = sp.r;
      PowerParams pp;
      pp.epsilon = req.epsilon / 3.0;
      pp.delta = req.delta / 2.0;
      pp.seed = derive_seed(req.seed, kPowerStream);
      const NormEstimate est = estimate_norm_sq(sk, pp);
      rep.estimate_sq = est.estimate_sq;
      rep.iterations_used = est.state.iteration;
      break;
    }
    case Method::kAuto:
      throw ParameterError("estimate: unresolved method");
  }

  rep.effective_rank = effective_rank(m, rep.estimate_sq);
  return rep;
}

}  // namespace specnorm
