#include "icfp/image.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace icfp {

double extend(const Image& image, Eigen::Index i, Eigen::Index j) {
  const Eigen::Index ci = std::clamp<Eigen::Index>(i, 0, image.width() - 1);
  const Eigen::Index cj = std::clamp<Eigen::Index>(j, 0, image.height() - 1);
  return image.values(ci, cj);
}

Eigen::Map<const Eigen::VectorXd> flatten(const Image& image) {
  return {image.values.data(), image.values.size()};
}

Image unflatten(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index width,
                Eigen::Index height) {
  if (v.size() != width * height) {
    throw std::invalid_argument("unflatten: vector size does not match grid");
  }
  Image out(width, height);
  Eigen::Map<Eigen::VectorXd>(out.values.data(), v.size()) = v;
  return out;
}

Image add_noise(const Image& x, double variance, std::uint64_t seed) {
  if (!(variance >= 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("add_noise: variance must be >= 0");
  }
  Image out = x;
  if (variance == 0.0) return out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(variance));
  double* p = out.values.data();
  for (Eigen::Index k = 0; k < out.pixels(); ++k) p[k] += gauss(rng);
  return out;
}

}  // namespace icfp
