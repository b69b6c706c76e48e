#include "icfp/core_sets.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icfp {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_dim(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch, got " +
                                std::to_string(got) + ", expected " +
                                std::to_string(want));
  }
}

Eigen::VectorXd clamp_to(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                         const Eigen::Ref<const Eigen::VectorXd>& z) {
  return z.cwiseMax(lo).cwiseMin(hi);
}

double box_violation(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                     const Eigen::Ref<const Eigen::VectorXd>& y) {
  const double below = (lo - y).maxCoeff();
  const double above = (y - hi).maxCoeff();
  return std::max({below, above, 0.0});
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  require(std::isfinite(lo) && std::isfinite(hi), "Interval: bounds must be finite");
  require(lo <= hi, "Interval: lo must not exceed hi");
}

Box::Box(Eigen::VectorXd lo_, Eigen::VectorXd hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  require(lo.size() == hi.size(), "Box: lo/hi size mismatch");
  require(lo.size() > 0, "Box: empty bounds");
  require(lo.allFinite() && hi.allFinite(), "Box: bounds must be finite");
  require((lo.array() <= hi.array()).all(), "Box: lo must not exceed hi componentwise");
}

Ball::Ball(Eigen::VectorXd center_, double radius_)
    : center(std::move(center_)), radius(radius_) {
  require(center.size() > 0, "Ball: empty center");
  require(center.allFinite(), "Ball: center must be finite");
  require(std::isfinite(radius) && radius >= 0.0, "Ball: radius must be >= 0");
}

Halfspace::Halfspace(Eigen::VectorXd normal_, double offset_)
    : normal(std::move(normal_)), offset(offset_) {
  require(normal.size() > 0, "Halfspace: empty normal");
  require(normal.allFinite() && std::isfinite(offset), "Halfspace: parameters must be finite");
  require(normal.norm() > 0.0, "Halfspace: normal must be nonzero");
}

Hyperplane::Hyperplane(Eigen::VectorXd normal_, double offset_)
    : normal(std::move(normal_)), offset(offset_) {
  require(normal.size() > 0, "Hyperplane: empty normal");
  require(normal.allFinite() && std::isfinite(offset), "Hyperplane: parameters must be finite");
  require(normal.norm() > 0.0, "Hyperplane: normal must be nonzero");
}

IntervalProduct::IntervalProduct(Eigen::VectorXd lo_, Eigen::VectorXd hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  require(lo.size() == hi.size(), "IntervalProduct: lo/hi size mismatch");
  require(lo.size() > 0, "IntervalProduct: empty bounds");
  require(lo.allFinite() && hi.allFinite(), "IntervalProduct: bounds must be finite");
  require((lo.array() <= hi.array()).all(),
          "IntervalProduct: lo must not exceed hi componentwise");
}

Eigen::Index dimension(const CoreSet& set) {
  return std::visit(
      [](const auto& s) -> Eigen::Index {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Box> ||
                             std::is_same_v<T, IntervalProduct>) {
          return s.lo.size();
        } else if constexpr (std::is_same_v<T, Ball>) {
          return s.center.size();
        } else {
          return s.normal.size();
        }
      },
      set);
}

Eigen::VectorXd project(const CoreSet& set,
                        const Eigen::Ref<const Eigen::VectorXd>& z) {
  check_dim(z.size(), dimension(set), "project");
  return std::visit(
      [&](const auto& s) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) {
          Eigen::VectorXd out(1);
          out[0] = std::min(std::max(z[0], s.lo), s.hi);
          return out;
        } else if constexpr (std::is_same_v<T, Box> ||
                             std::is_same_v<T, IntervalProduct>) {
          return clamp_to(s.lo, s.hi, z);
        } else if constexpr (std::is_same_v<T, Ball>) {
          const Eigen::VectorXd d = z - s.center;
          const double dist = d.norm();
          if (dist <= s.radius) return z;  // interior/boundary, incl. z == center
          return s.center + (s.radius / dist) * d;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          const double excess = s.normal.dot(z) - s.offset;
          if (excess <= 0.0) return z;
          return z - (excess / s.normal.squaredNorm()) * s.normal;
        } else {  // Hyperplane
          const double excess = s.normal.dot(z) - s.offset;
          return z - (excess / s.normal.squaredNorm()) * s.normal;
        }
      },
      set);
}

double violation(const CoreSet& set,
                 const Eigen::Ref<const Eigen::VectorXd>& y) {
  check_dim(y.size(), dimension(set), "violation");
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) {
          return std::max({s.lo - y[0], y[0] - s.hi, 0.0});
        } else if constexpr (std::is_same_v<T, Box> ||
                             std::is_same_v<T, IntervalProduct>) {
          return box_violation(s.lo, s.hi, y);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return std::max((y - s.center).norm() - s.radius, 0.0);
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          return std::max((s.normal.dot(y) - s.offset) / s.normal.norm(), 0.0);
        } else {  // Hyperplane
          return std::abs(s.normal.dot(y) - s.offset) / s.normal.norm();
        }
      },
      set);
}

bool membership(const CoreSet& set, const Eigen::Ref<const Eigen::VectorXd>& y,
                double tol) {
  require(tol >= 0.0, "membership: tol must be >= 0");
  return violation(set, y) <= tol;
}

}  // namespace icfp
