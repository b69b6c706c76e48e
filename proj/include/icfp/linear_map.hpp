#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace icfp {

// One tap of a grid stencil: reads the pixel at offset (di, dj) with the
// given weight. Indices outside the grid clamp to the nearest pixel
// (constant extension of the image).
struct StencilTap {
  int di;
  int dj;
  double weight;
};

// Matrix-free linear operator with an adjoint. Image-scale instances never
// materialize their matrices; everything downstream only needs apply /
// apply_adjoint and a spectral-norm estimate.
class LinearMap {
 public:
  enum class Kind { kZero, kIdentity, kScaledIdentity, kDense, kStencil, kOther };

  Eigen::Index rows() const;
  Eigen::Index cols() const;
  Kind kind() const;

  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const;
  Eigen::VectorXd apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v) const;

  // Exact spectral norm when it is analytically available (identity, zero,
  // scalar multiples), otherwise empty.
  std::optional<double> known_norm() const;

  // Cheap analytic upper bound on the spectral norm, when one is available.
  // For stencils this is sqrt(max row sum * max column sum) of absolute
  // weights; for dense maps the Frobenius norm.
  std::optional<double> norm_upper_bound() const;

  static LinearMap identity(Eigen::Index n);
  static LinearMap zero(Eigen::Index n);
  static LinearMap scaled_identity(Eigen::Index n, double c);
  static LinearMap dense(Eigen::MatrixXd m);

  // Local pattern on an n1 x n2 grid acting on vectors flattened as
  // p = i + n1*j. Out-of-grid taps clamp to the boundary.
  static LinearMap stencil(Eigen::Index n1, Eigen::Index n2,
                           std::vector<StencilTap> taps);

  struct Impl;
  explicit LinearMap(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

// The map v -> v - a(v). Recognizes trivial operand kinds so that e.g.
// identity_minus(zero) reports an exact unit norm.
LinearMap identity_minus(const LinearMap& a);

// Power-iteration estimate of the spectral norm, run on M^T M with a
// deterministic seeded start vector. Stops after `iters` rounds or once the
// estimate's relative change drops below 1e-10. Exact for maps whose norm
// is analytically known; returns 0 exactly for the zero map.
double operator_norm(const LinearMap& m, int iters = 500,
                     std::uint64_t seed = 0x853c49e6748fea9bULL);

// A LinearMap whose adjoint is its inverse. Construction validates the
// declared orthogonality where it is not true by construction.
class OrthogonalMap {
 public:
  static OrthogonalMap identity(Eigen::Index n);
  static OrthogonalMap rotation2d(double radians);
  // Validates U^T U = I on the given matrix (tolerance 1e-10 per entry).
  static OrthogonalMap from_dense(Eigen::MatrixXd u);

  Eigen::Index size() const { return map_.rows(); }
  const LinearMap& map() const { return map_; }

  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const {
    return map_.apply(v);
  }
  Eigen::VectorXd apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v) const {
    return map_.apply_adjoint(v);
  }

 private:
  explicit OrthogonalMap(LinearMap m) : map_(std::move(m)) {}
  LinearMap map_;
};

}  // namespace icfp
