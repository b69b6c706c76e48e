#include "icfp/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace icfp {

namespace {

void check_same_size(const Image& a, const Image& b, const char* what) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument(std::string(what) + ": image dimensions differ");
  }
}

}  // namespace

double ssim(const Image& a, const Image& b) {
  check_same_size(a, b, "ssim");
  constexpr Eigen::Index kWindow = 8;
  constexpr double kN = static_cast<double>(kWindow * kWindow);
  constexpr double kC1 = 0.01 * 0.01;
  constexpr double kC2 = 0.03 * 0.03;
  if (a.width() < kWindow || a.height() < kWindow) {
    throw std::invalid_argument("ssim: images must be at least 8x8");
  }

  double total = 0.0;
  long windows = 0;
  for (Eigen::Index j0 = 0; j0 + kWindow <= a.height(); ++j0) {
    for (Eigen::Index i0 = 0; i0 + kWindow <= a.width(); ++i0) {
      double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
      for (Eigen::Index j = j0; j < j0 + kWindow; ++j) {
        for (Eigen::Index i = i0; i < i0 + kWindow; ++i) {
          const double va = a(i, j);
          const double vb = b(i, j);
          sa += va;
          sb += vb;
          saa += va * va;
          sbb += vb * vb;
          sab += va * vb;
        }
      }
      const double mu_a = sa / kN;
      const double mu_b = sb / kN;
      const double var_a = saa / kN - mu_a * mu_a;
      const double var_b = sbb / kN - mu_b * mu_b;
      const double cov = sab / kN - mu_a * mu_b;
      const double num = (2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2);
      const double den = (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
      total += num / den;
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

double total_variation(const Image& x) {
  double tv = 0.0;
  for (Eigen::Index j = 0; j < x.height(); ++j) {
    for (Eigen::Index i = 0; i < x.width(); ++i) {
      const double dx = (i + 1 < x.width()) ? x(i + 1, j) - x(i, j) : 0.0;
      const double dy = (j + 1 < x.height()) ? x(i, j + 1) - x(i, j) : 0.0;
      tv += std::sqrt(dx * dx + dy * dy);
    }
  }
  return tv;
}

double mse(const Image& a, const Image& b) {
  check_same_size(a, b, "mse");
  return (a.values - b.values).square().sum() / static_cast<double>(a.pixels());
}

}  // namespace icfp
