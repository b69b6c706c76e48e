#pragma once

#include <Eigen/Core>

#include <variant>

namespace icfp {

// Closed convex sets with exact, closed-form metric projections. These are
// the building blocks every variable set is made from; each variant
// validates its parameters at construction so a held value is always a
// nonempty closed convex set.

struct Interval {
  double lo;
  double hi;
  Interval(double lo, double hi);
};

struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  Box(Eigen::VectorXd lo, Eigen::VectorXd hi);
};

struct Ball {
  Eigen::VectorXd center;
  double radius;
  Ball(Eigen::VectorXd center, double radius);
};

// { y : <normal, y> <= offset }
struct Halfspace {
  Eigen::VectorXd normal;
  double offset;
  Halfspace(Eigen::VectorXd normal, double offset);
};

// { y : <normal, y> = offset }
struct Hyperplane {
  Eigen::VectorXd normal;
  double offset;
  Hyperplane(Eigen::VectorXd normal, double offset);
};

// Semantically a Box, kept as its own variant for image-scale instances
// where one flat bound pair per pixel is the natural storage.
struct IntervalProduct {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  IntervalProduct(Eigen::VectorXd lo, Eigen::VectorXd hi);
};

using CoreSet =
    std::variant<Interval, Box, Ball, Halfspace, Hyperplane, IntervalProduct>;

// Ambient dimension of the set.
Eigen::Index dimension(const CoreSet& set);

// Unique nearest point of `set` to `z`. Throws std::invalid_argument on a
// dimension mismatch.
Eigen::VectorXd project(const CoreSet& set,
                        const Eigen::Ref<const Eigen::VectorXd>& z);

// How far `y` is from satisfying the set's defining inequalities, measured
// so that zero means membership: componentwise overshoot for interval-type
// sets, distance beyond the radius for balls, and normal-direction distance
// for halfspaces/hyperplanes. Never negative.
double violation(const CoreSet& set,
                 const Eigen::Ref<const Eigen::VectorXd>& y);

// True iff `y` violates the defining inequalities by at most `tol`.
bool membership(const CoreSet& set, const Eigen::Ref<const Eigen::VectorXd>& y,
                double tol);

}  // namespace icfp
