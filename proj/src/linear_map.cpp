#include "icfp/linear_map.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace icfp {

struct LinearMap::Impl {
  virtual ~Impl() = default;
  virtual Eigen::Index rows() const = 0;
  virtual Eigen::Index cols() const = 0;
  virtual Kind kind() const = 0;
  virtual Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const = 0;
  virtual Eigen::VectorXd apply_adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& v) const = 0;
  virtual std::optional<double> known_norm() const { return std::nullopt; }
  virtual std::optional<double> norm_upper_bound() const { return known_norm(); }
};

namespace {

using Kind = LinearMap::Kind;

void check_apply_dim(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": vector has size " +
                                std::to_string(got) + ", operator expects " +
                                std::to_string(want));
  }
}

struct ScaledIdentityImpl final : LinearMap::Impl {
  Eigen::Index n;
  double c;
  ScaledIdentityImpl(Eigen::Index n_, double c_) : n(n_), c(c_) {}
  Eigen::Index rows() const override { return n; }
  Eigen::Index cols() const override { return n; }
  Kind kind() const override {
    if (c == 0.0) return Kind::kZero;
    if (c == 1.0) return Kind::kIdentity;
    return Kind::kScaledIdentity;
  }
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    check_apply_dim(v.size(), n, "apply");
    if (c == 1.0) return v;
    if (c == 0.0) return Eigen::VectorXd::Zero(n);
    return c * v;
  }
  Eigen::VectorXd apply_adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    return apply(v);
  }
  std::optional<double> known_norm() const override { return std::abs(c); }
};

struct DenseImpl final : LinearMap::Impl {
  Eigen::MatrixXd m;
  explicit DenseImpl(Eigen::MatrixXd m_) : m(std::move(m_)) {}
  Eigen::Index rows() const override { return m.rows(); }
  Eigen::Index cols() const override { return m.cols(); }
  Kind kind() const override { return Kind::kDense; }
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    check_apply_dim(v.size(), m.cols(), "apply");
    return m * v;
  }
  Eigen::VectorXd apply_adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    check_apply_dim(v.size(), m.rows(), "apply_adjoint");
    return m.transpose() * v;
  }
  std::optional<double> norm_upper_bound() const override { return m.norm(); }
};

struct StencilImpl final : LinearMap::Impl {
  Eigen::Index n1, n2;
  std::vector<StencilTap> taps;
  double bound;

  StencilImpl(Eigen::Index n1_, Eigen::Index n2_, std::vector<StencilTap> taps_)
      : n1(n1_), n2(n2_), taps(std::move(taps_)) {
    // Row sums of |weights| are constant; column sums depend on how taps
    // pile up at clamped boundaries, so count them exactly.
    double row_sum = 0.0;
    for (const auto& t : taps) row_sum += std::abs(t.weight);
    Eigen::VectorXd col_sums = Eigen::VectorXd::Zero(n1 * n2);
    for (Eigen::Index j = 0; j < n2; ++j) {
      for (Eigen::Index i = 0; i < n1; ++i) {
        for (const auto& t : taps) {
          col_sums[source(i, j, t)] += std::abs(t.weight);
        }
      }
    }
    bound = std::sqrt(row_sum * col_sums.maxCoeff());
  }

  Eigen::Index source(Eigen::Index i, Eigen::Index j, const StencilTap& t) const {
    const Eigen::Index si = std::clamp<Eigen::Index>(i + t.di, 0, n1 - 1);
    const Eigen::Index sj = std::clamp<Eigen::Index>(j + t.dj, 0, n2 - 1);
    return si + n1 * sj;
  }

  Eigen::Index rows() const override { return n1 * n2; }
  Eigen::Index cols() const override { return n1 * n2; }
  Kind kind() const override { return Kind::kStencil; }

  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    check_apply_dim(v.size(), n1 * n2, "apply");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n1 * n2);
    for (Eigen::Index j = 0; j < n2; ++j) {
      for (Eigen::Index i = 0; i < n1; ++i) {
        double acc = 0.0;
        for (const auto& t : taps) acc += t.weight * v[source(i, j, t)];
        out[i + n1 * j] = acc;
      }
    }
    return out;
  }

  Eigen::VectorXd apply_adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    check_apply_dim(v.size(), n1 * n2, "apply_adjoint");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n1 * n2);
    for (Eigen::Index j = 0; j < n2; ++j) {
      for (Eigen::Index i = 0; i < n1; ++i) {
        const double w = v[i + n1 * j];
        for (const auto& t : taps) out[source(i, j, t)] += t.weight * w;
      }
    }
    return out;
  }

  std::optional<double> norm_upper_bound() const override { return bound; }
};

// v -> v - a(v), for square a.
struct ResidualImpl final : LinearMap::Impl {
  LinearMap a;
  explicit ResidualImpl(LinearMap a_) : a(std::move(a_)) {}
  Eigen::Index rows() const override { return a.rows(); }
  Eigen::Index cols() const override { return a.cols(); }
  Kind kind() const override { return Kind::kOther; }
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    return v - a.apply(v);
  }
  Eigen::VectorXd apply_adjoint(
      const Eigen::Ref<const Eigen::VectorXd>& v) const override {
    return v - a.apply_adjoint(v);
  }
  std::optional<double> norm_upper_bound() const override {
    if (auto b = a.norm_upper_bound()) return 1.0 + *b;
    return std::nullopt;
  }
};

}  // namespace

LinearMap::LinearMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
  if (!impl_) throw std::invalid_argument("LinearMap: null implementation");
}

Eigen::Index LinearMap::rows() const { return impl_->rows(); }
Eigen::Index LinearMap::cols() const { return impl_->cols(); }
LinearMap::Kind LinearMap::kind() const { return impl_->kind(); }

Eigen::VectorXd LinearMap::apply(const Eigen::Ref<const Eigen::VectorXd>& v) const {
  return impl_->apply(v);
}

Eigen::VectorXd LinearMap::apply_adjoint(
    const Eigen::Ref<const Eigen::VectorXd>& v) const {
  return impl_->apply_adjoint(v);
}

std::optional<double> LinearMap::known_norm() const { return impl_->known_norm(); }

std::optional<double> LinearMap::norm_upper_bound() const {
  return impl_->norm_upper_bound();
}

LinearMap LinearMap::identity(Eigen::Index n) { return scaled_identity(n, 1.0); }

LinearMap LinearMap::zero(Eigen::Index n) { return scaled_identity(n, 0.0); }

LinearMap LinearMap::scaled_identity(Eigen::Index n, double c) {
  if (n < 1) throw std::invalid_argument("LinearMap: dimension must be positive");
  if (!std::isfinite(c)) throw std::invalid_argument("LinearMap: scale must be finite");
  return LinearMap(std::make_shared<ScaledIdentityImpl>(n, c));
}

LinearMap LinearMap::dense(Eigen::MatrixXd m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw std::invalid_argument("LinearMap: empty matrix");
  }
  if (!m.allFinite()) throw std::invalid_argument("LinearMap: matrix must be finite");
  return LinearMap(std::make_shared<DenseImpl>(std::move(m)));
}

LinearMap LinearMap::stencil(Eigen::Index n1, Eigen::Index n2,
                             std::vector<StencilTap> taps) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("LinearMap: grid dimensions must be positive");
  }
  if (taps.empty()) throw std::invalid_argument("LinearMap: stencil needs taps");
  return LinearMap(std::make_shared<StencilImpl>(n1, n2, std::move(taps)));
}

LinearMap identity_minus(const LinearMap& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("identity_minus: operator must be square");
  }
  switch (a.kind()) {
    case LinearMap::Kind::kZero:
      return LinearMap::identity(a.rows());
    case LinearMap::Kind::kIdentity:
      return LinearMap::zero(a.rows());
    case LinearMap::Kind::kScaledIdentity: {
      // Probe the scale: s * e0 has the scale in its first coordinate.
      Eigen::VectorXd e0 = Eigen::VectorXd::Zero(a.cols());
      e0[0] = 1.0;
      const double c = a.apply(e0)[0];
      return LinearMap::scaled_identity(a.rows(), 1.0 - c);
    }
    default:
      return LinearMap(std::make_shared<ResidualImpl>(a));
  }
}

double operator_norm(const LinearMap& m, int iters, std::uint64_t seed) {
  if (iters < 1) throw std::invalid_argument("operator_norm: iters must be >= 1");
  if (auto kn = m.known_norm()) return *kn;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
  const double nv = v.norm();
  if (nv == 0.0) {
    v.setConstant(1.0 / std::sqrt(static_cast<double>(v.size())));
  } else {
    v /= nv;
  }

  double estimate = 0.0;
  double previous = -1.0;
  for (int it = 0; it < iters; ++it) {
    const Eigen::VectorXd mv = m.apply(v);
    estimate = mv.norm();
    if (estimate == 0.0) return 0.0;  // v in the kernel; norm estimate vacuous
    const Eigen::VectorXd w = m.apply_adjoint(mv);
    const double wn = w.norm();
    if (wn <= 0.0) break;
    v = w / wn;
    if (previous >= 0.0 &&
        std::abs(estimate - previous) <= 1e-10 * std::max(1.0, estimate)) {
      break;
    }
    previous = estimate;
  }
  return estimate;
}

OrthogonalMap OrthogonalMap::identity(Eigen::Index n) {
  return OrthogonalMap(LinearMap::identity(n));
}

OrthogonalMap OrthogonalMap::rotation2d(double radians) {
  Eigen::Matrix2d r;
  r << std::cos(radians), -std::sin(radians),  //
      std::sin(radians), std::cos(radians);
  return OrthogonalMap(LinearMap::dense(r));
}

OrthogonalMap OrthogonalMap::from_dense(Eigen::MatrixXd u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("OrthogonalMap: matrix must be square");
  }
  const Eigen::MatrixXd gram = u.transpose() * u;
  const double err =
      (gram - Eigen::MatrixXd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    throw std::invalid_argument(
        "OrthogonalMap: matrix is not orthogonal (max |U^T U - I| = " +
        std::to_string(err) + ")");
  }
  return OrthogonalMap(LinearMap::dense(std::move(u)));
}

}  // namespace icfp
