#include "icfp/phantom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace icfp {

namespace {

struct Ellipse {
  double intensity;
  double a, b;      // semi-axes
  double x0, y0;    // center
  double phi_deg;   // rotation, degrees counterclockwise
};

// Contrast-balanced variant of the classic head phantom (the table used by
// the usual imaging toolboxes); additive values stay within [0, 1].
constexpr std::array<Ellipse, 10> kEllipses = {{
    {1.0, 0.69, 0.92, 0.0, 0.0, 0.0},
    {-0.8, 0.6624, 0.8740, 0.0, -0.0184, 0.0},
    {-0.2, 0.1100, 0.3100, 0.22, 0.0, -18.0},
    {-0.2, 0.1600, 0.4100, -0.22, 0.0, 18.0},
    {0.1, 0.2100, 0.2500, 0.0, 0.35, 0.0},
    {0.1, 0.0460, 0.0460, 0.0, 0.1, 0.0},
    {0.1, 0.0460, 0.0460, 0.0, -0.1, 0.0},
    {0.1, 0.0460, 0.0230, -0.08, -0.605, 0.0},
    {0.1, 0.0230, 0.0230, 0.0, -0.606, 0.0},
    {0.1, 0.0230, 0.0460, 0.06, -0.605, 0.0},
}};

}  // namespace

Image shepp_logan(Eigen::Index width, Eigen::Index height) {
  if (width < 16 || height < 16) {
    throw std::invalid_argument("shepp_logan: dimensions must be >= 16");
  }
  Image out(width, height);
  for (Eigen::Index j = 0; j < height; ++j) {
    // Row 0 is the top of the head: v runs downward from +1.
    const double v = (static_cast<double>(height) - 2.0 * (j + 0.5)) / height;
    for (Eigen::Index i = 0; i < width; ++i) {
      const double u = (2.0 * (i + 0.5) - static_cast<double>(width)) / width;
      double value = 0.0;
      for (const auto& e : kEllipses) {
        const double phi = e.phi_deg * std::numbers::pi / 180.0;
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const double du = u - e.x0;
        const double dv = v - e.y0;
        const double xr = (du * c + dv * s) / e.a;
        const double yr = (-du * s + dv * c) / e.b;
        if (xr * xr + yr * yr <= 1.0) value += e.intensity;
      }
      out(i, j) = std::clamp(value, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace icfp
