#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "icfp/variable_set.hpp"

namespace icfp {

// S variable sets over a common ambient space, with the per-set K operators
// and the gradient Lipschitz constant precomputed. Build through
// make_instance so the cached pieces always match the sets.
struct IcfpInstance {
  std::vector<VariableSet> sets;
  std::vector<LinearMap> k_ops;
  double l_icfp;

  Eigen::Index dim() const { return sets.front().dim(); }
  std::size_t size() const { return sets.size(); }
};

IcfpInstance make_instance(std::vector<VariableSet> sets, int norm_iters = 500,
                           std::uint64_t norm_seed = 0x853c49e6748fea9bULL);

// Block-harmonic steering: sigma_t = 1 / (floor(t / beta) + 1). Positive,
// constant within blocks of length beta, tending to zero with divergent sum.
struct SteeringSpec {
  int beta = 100;
};

double steering_value(const SteeringSpec& spec, long t);

// Proximity 0.5 * sum_s alpha_s^2 || (I - P_omega_s)(K_s x) ||^2 — half the
// sum of squared distances from x to each C_s(x). Zero exactly at solutions.
double proximity(const IcfpInstance& instance,
                 const Eigen::Ref<const Eigen::VectorXd>& x);

// Gradient sum_s alpha_s^2 K_s^T (I - P_omega_s)(K_s x).
Eigen::VectorXd gradient(const IcfpInstance& instance,
                         const Eigen::Ref<const Eigen::VectorXd>& x);

// One full-gradient step x - gamma * grad. Requires 0 < gamma < 2/L.
Eigen::VectorXd simultaneous_step(const IcfpInstance& instance,
                                  const Eigen::Ref<const Eigen::VectorXd>& x,
                                  double gamma);

// One cyclic step on set i(k) = k mod S with step size sigma_k.
Eigen::VectorXd sequential_step(const IcfpInstance& instance,
                                const Eigen::Ref<const Eigen::VectorXd>& x,
                                long k, const SteeringSpec& steering);

enum class Algorithm { kSimultaneous, kSequential };

struct SolveConfig {
  long max_iters = 1000;
  // Simultaneous step size; empty selects 1 / l_icfp.
  std::optional<double> gamma;
  SteeringSpec steering;
  // Stop once ||x_{k+1} - x_k|| <= stop_tol; 0 stops only on an exact fixed
  // point, i.e. normally runs all max_iters.
  double stop_tol = 0.0;
  long trace_every = 1;
};

struct TraceRow {
  long iter;
  double proximity;
  double step_norm;  // NaN on the initial row
  std::vector<double> extra;
};

struct IterationTrace {
  std::vector<std::string> extra_names;
  std::vector<TraceRow> rows;
};

// Called on every recorded iteration (always including 0 and the last);
// values pushed into `extra` land in the trace row.
using Observer =
    std::function<void(long iter, const Eigen::VectorXd& x, std::vector<double>& extra)>;

struct SolveResult {
  Eigen::VectorXd x;
  IterationTrace trace;
};

SolveResult solve(const IcfpInstance& instance,
                  const Eigen::Ref<const Eigen::VectorXd>& x0,
                  const SolveConfig& config, Algorithm algorithm,
                  const Observer& observe = {});

}  // namespace icfp
