#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "icfp/core_sets.hpp"
#include "icfp/linear_map.hpp"

namespace icfp {

// The moving constraint set C(x) = alpha * U(omega) + A x: a fixed core set
// scaled by alpha, rotated by U, and shifted by the point A x. Projections
// onto it reduce to a projection onto the core set.
struct VariableSet {
  double alpha;
  OrthogonalMap u;
  LinearMap a;
  CoreSet omega;

  VariableSet(double alpha, OrthogonalMap u, LinearMap a, CoreSet omega);

  Eigen::Index dim() const { return u.size(); }
};

// Exact metric projection of z onto C(x):
//   P_{C(x)}(z) = alpha * U P_omega( U^T (z - A x) / alpha ) + A x.
Eigen::VectorXd project(const VariableSet& c,
                        const Eigen::Ref<const Eigen::VectorXd>& x,
                        const Eigen::Ref<const Eigen::VectorXd>& z);

// The operator K = (1/alpha) U^T (I - A); its adjoint is
// K^T = (1/alpha) (I - A^T) U.
LinearMap make_k(const VariableSet& c);

// Sum over sets of ||I - A_s||_2^2 — the Lipschitz constant of the proximity
// gradient. Spectral norms come from operator_norm; if an estimate is not
// finite the operator's analytic upper bound stands in.
double lipschitz_constant(const std::vector<VariableSet>& sets,
                          int norm_iters = 500,
                          std::uint64_t norm_seed = 0x853c49e6748fea9bULL);

}  // namespace icfp
