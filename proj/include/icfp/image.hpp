#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace icfp {

// Gray-value image with intensities nominally in [0, 1]. Pixel (i, j) is
// column i (0..width-1) and row j (0..height-1); the storage is laid out so
// that flattening to a solver vector and streaming to a raster file agree:
// p = i + width * j.
struct Image {
  Eigen::ArrayXXd values;  // width rows x height cols, values(i, j)

  Image() = default;
  Image(Eigen::Index width, Eigen::Index height)
      : values(Eigen::ArrayXXd::Zero(width, height)) {}
  explicit Image(Eigen::ArrayXXd v) : values(std::move(v)) {}

  Eigen::Index width() const { return values.rows(); }
  Eigen::Index height() const { return values.cols(); }
  Eigen::Index pixels() const { return values.size(); }

  double& operator()(Eigen::Index i, Eigen::Index j) { return values(i, j); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values(i, j); }
};

// Intensity at (i, j) under constant extension beyond the image domain:
// out-of-range indices clamp to the nearest pixel, including corners where
// both clamp.
double extend(const Image& image, Eigen::Index i, Eigen::Index j);

// Flat view of the pixel grid as a solver vector and back.
Eigen::Map<const Eigen::VectorXd> flatten(const Image& image);
Image unflatten(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index width,
                Eigen::Index height);

// y = x + eta with i.i.d. zero-mean Gaussian noise of the given variance,
// drawn from a seeded generator in pixel order. Values are not clipped.
Image add_noise(const Image& x, double variance, std::uint64_t seed);

}  // namespace icfp
