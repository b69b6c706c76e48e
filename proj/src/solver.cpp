#include "icfp/solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace icfp {

namespace {

void check_x_dim(const IcfpInstance& instance,
                 const Eigen::Ref<const Eigen::VectorXd>& x, const char* what) {
  if (x.size() != instance.dim()) {
    throw std::invalid_argument(std::string(what) + ": point has size " +
                                std::to_string(x.size()) + ", instance lives in R^" +
                                std::to_string(instance.dim()));
  }
}

// alpha^2 K^T (I - P_omega)(K x) for one set; the residual norm comes along
// for free when the caller wants the proximity value too.
Eigen::VectorXd set_gradient(const VariableSet& set, const LinearMap& k,
                             const Eigen::Ref<const Eigen::VectorXd>& x,
                             double* residual_sq = nullptr) {
  const Eigen::VectorXd t = k.apply(x);
  const Eigen::VectorXd r = t - project(set.omega, t);
  if (residual_sq) *residual_sq = r.squaredNorm();
  return (set.alpha * set.alpha) * k.apply_adjoint(r);
}

}  // namespace

IcfpInstance make_instance(std::vector<VariableSet> sets, int norm_iters,
                           std::uint64_t norm_seed) {
  if (sets.empty()) {
    throw std::invalid_argument("make_instance: need at least one set");
  }
  const Eigen::Index n = sets.front().dim();
  for (const auto& s : sets) {
    if (s.dim() != n) {
      throw std::invalid_argument("make_instance: mixed ambient dimensions");
    }
  }
  IcfpInstance instance;
  instance.l_icfp = lipschitz_constant(sets, norm_iters, norm_seed);
  instance.k_ops.reserve(sets.size());
  for (const auto& s : sets) instance.k_ops.push_back(make_k(s));
  instance.sets = std::move(sets);
  return instance;
}

double steering_value(const SteeringSpec& spec, long t) {
  if (spec.beta < 1) throw std::invalid_argument("steering_value: beta must be >= 1");
  if (t < 0) throw std::invalid_argument("steering_value: t must be >= 0");
  return 1.0 / static_cast<double>(t / spec.beta + 1);
}

double proximity(const IcfpInstance& instance,
                 const Eigen::Ref<const Eigen::VectorXd>& x) {
  check_x_dim(instance, x, "proximity");
  double value = 0.0;
  for (std::size_t s = 0; s < instance.size(); ++s) {
    const Eigen::VectorXd t = instance.k_ops[s].apply(x);
    const Eigen::VectorXd r = t - project(instance.sets[s].omega, t);
    const double a = instance.sets[s].alpha;
    value += 0.5 * a * a * r.squaredNorm();
  }
  return value;
}

Eigen::VectorXd gradient(const IcfpInstance& instance,
                         const Eigen::Ref<const Eigen::VectorXd>& x) {
  check_x_dim(instance, x, "gradient");
  Eigen::VectorXd g = Eigen::VectorXd::Zero(instance.dim());
  for (std::size_t s = 0; s < instance.size(); ++s) {
    g += set_gradient(instance.sets[s], instance.k_ops[s], x);
  }
  return g;
}

Eigen::VectorXd simultaneous_step(const IcfpInstance& instance,
                                  const Eigen::Ref<const Eigen::VectorXd>& x,
                                  double gamma) {
  check_x_dim(instance, x, "simultaneous_step");
  if (!(gamma > 0.0 && gamma < 2.0 / instance.l_icfp)) {
    throw std::invalid_argument("simultaneous_step: gamma = " +
                                std::to_string(gamma) + " outside (0, 2/L) with L = " +
                                std::to_string(instance.l_icfp));
  }
  return x - gamma * gradient(instance, x);
}

Eigen::VectorXd sequential_step(const IcfpInstance& instance,
                                const Eigen::Ref<const Eigen::VectorXd>& x,
                                long k, const SteeringSpec& steering) {
  check_x_dim(instance, x, "sequential_step");
  if (k < 0) throw std::invalid_argument("sequential_step: k must be >= 0");
  const std::size_t i = static_cast<std::size_t>(k) % instance.size();
  const double sigma = steering_value(steering, k);
  return x - sigma * set_gradient(instance.sets[i], instance.k_ops[i], x);
}

SolveResult solve(const IcfpInstance& instance,
                  const Eigen::Ref<const Eigen::VectorXd>& x0,
                  const SolveConfig& config, Algorithm algorithm,
                  const Observer& observe) {
  check_x_dim(instance, x0, "solve");
  if (config.max_iters < 0) {
    throw std::invalid_argument("solve: max_iters must be >= 0");
  }
  if (config.trace_every < 1) {
    throw std::invalid_argument("solve: trace_every must be >= 1");
  }
  if (config.stop_tol < 0.0) {
    throw std::invalid_argument("solve: stop_tol must be >= 0");
  }
  const double gamma = config.gamma.value_or(1.0 / instance.l_icfp);
  if (algorithm == Algorithm::kSimultaneous &&
      !(gamma > 0.0 && gamma < 2.0 / instance.l_icfp)) {
    throw std::invalid_argument("solve: gamma = " + std::to_string(gamma) +
                                " outside (0, 2/L) with L = " +
                                std::to_string(instance.l_icfp));
  }

  SolveResult result;
  result.x = x0;
  auto record = [&](long iter, double step_norm) {
    TraceRow row;
    row.iter = iter;
    row.proximity = proximity(instance, result.x);
    row.step_norm = step_norm;
    if (observe) observe(iter, result.x, row.extra);
    result.trace.rows.push_back(std::move(row));
  };

  record(0, std::numeric_limits<double>::quiet_NaN());

  const double norm_guard = 1e6 * std::max(1.0, x0.norm());
  bool warned = false;
  for (long k = 0; k < config.max_iters; ++k) {
    Eigen::VectorXd next =
        algorithm == Algorithm::kSimultaneous
            ? simultaneous_step(instance, result.x, gamma)
            : sequential_step(instance, result.x, k, config.steering);
    const double step_norm = (next - result.x).norm();
    result.x = std::move(next);

    const long iter = k + 1;
    const bool stopping = step_norm <= config.stop_tol || iter == config.max_iters;
    if (iter % config.trace_every == 0 || stopping) record(iter, step_norm);

    if (!warned && result.x.norm() > norm_guard) {
      // Convergence of the sequential scheme presumes a bounded sequence;
      // surface a hint instead of silently diverging.
      std::fprintf(stderr,
                   "icfp: warning: iterate norm exceeded 1e6 x its initial "
                   "value at iteration %ld\n",
                   iter);
      warned = true;
    }
    if (stopping) break;
  }
  return result;
}

}  // namespace icfp
