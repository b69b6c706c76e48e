#include "icfp/variable_set.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace icfp {

namespace {

struct KImpl final : LinearMap::Impl {
  double alpha;
  OrthogonalMap u;
  LinearMap a;

  KImpl(double alpha_, OrthogonalMap u_, LinearMap a_)
      : alpha(alpha_), u(std::move(u_)), a(std::move(a_)) {}

  Eigen::Index rows() const override { return u.size(); }
  Eigen::Index cols() const override { return u.size(); }
  LinearMap::Kind kind() const override { return LinearMap::Kind::kOther; }

  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    return u.apply_adjoint(v - a.apply(v)) / alpha;
  }

  Eigen::VectorXd apply_adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    const Eigen::VectorXd w = u.apply(v);
    return (w - a.apply_adjoint(w)) / alpha;
  }

  std::optional<double> known_norm() const override {
    // U is orthogonal, so ||K|| = ||I - A|| / alpha; exact for trivial A.
    switch (a.kind()) {
      case LinearMap::Kind::kZero:
        return 1.0 / alpha;
      case LinearMap::Kind::kIdentity:
        return 0.0;
      default:
        return std::nullopt;
    }
  }

  std::optional<double> norm_upper_bound() const override {
    if (auto kn = known_norm()) return kn;
    if (auto b = a.norm_upper_bound()) return (1.0 + *b) / alpha;
    return std::nullopt;
  }
};

}  // namespace

VariableSet::VariableSet(double alpha_, OrthogonalMap u_, LinearMap a_,
                         CoreSet omega_)
    : alpha(alpha_), u(std::move(u_)), a(std::move(a_)), omega(std::move(omega_)) {
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw std::invalid_argument("VariableSet: alpha must be positive");
  }
  const Eigen::Index n = u.size();
  if (a.rows() != n || a.cols() != n) {
    throw std::invalid_argument("VariableSet: shift operator is " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n));
  }
  if (dimension(omega) != n) {
    throw std::invalid_argument("VariableSet: core set dimension " +
                                std::to_string(dimension(omega)) +
                                " does not match ambient dimension " +
                                std::to_string(n));
  }
}

Eigen::VectorXd project(const VariableSet& c,
                        const Eigen::Ref<const Eigen::VectorXd>& x,
                        const Eigen::Ref<const Eigen::VectorXd>& z) {
  if (x.size() != c.dim() || z.size() != c.dim()) {
    throw std::invalid_argument("project(VariableSet): dimension mismatch");
  }
  const Eigen::VectorXd shift = c.a.apply(x);
  const Eigen::VectorXd w = c.u.apply_adjoint(z - shift) / c.alpha;
  return c.alpha * c.u.apply(project(c.omega, w)) + shift;
}

LinearMap make_k(const VariableSet& c) {
  return LinearMap(std::make_shared<KImpl>(c.alpha, c.u, c.a));
}

double lipschitz_constant(const std::vector<VariableSet>& sets, int norm_iters,
                          std::uint64_t norm_seed) {
  if (sets.empty()) {
    throw std::invalid_argument("lipschitz_constant: set list is empty");
  }
  const Eigen::Index n = sets.front().dim();
  double total = 0.0;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s].dim() != n) {
      throw std::invalid_argument("lipschitz_constant: mixed ambient dimensions");
    }
    // Same seed for every set keeps the result invariant under permutations
    // of the list (up to summation order).
    const LinearMap residual = identity_minus(sets[s].a);
    double nrm = operator_norm(residual, norm_iters, norm_seed);
    if (!std::isfinite(nrm)) {
      if (auto b = residual.norm_upper_bound()) {
        nrm = *b;
      } else {
        throw std::runtime_error("lipschitz_constant: norm estimate failed");
      }
    }
    total += nrm * nrm;
  }
  return total;
}

}  // namespace icfp
