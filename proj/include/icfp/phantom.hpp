#pragma once

#include "icfp/image.hpp"

namespace icfp {

// Ten-ellipse head phantom rasterized by midpoint sampling on [-1,1]^2,
// additive intensities clipped to [0, 1]. Requires both dimensions >= 16.
Image shepp_logan(Eigen::Index width, Eigen::Index height);

}  // namespace icfp
