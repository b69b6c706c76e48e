#pragma once

#include "icfp/image.hpp"

namespace icfp {

// Mean structural similarity over 8x8 uniform windows with stride 1,
// stabilization constants (0.01)^2 and (0.03)^2 for unit dynamic range.
// 1.0 for identical images. Requires equal dimensions of at least 8x8.
double ssim(const Image& a, const Image& b);

// Isotropic discrete total variation: sum over pixels of the Euclidean norm
// of the forward differences (one-sided zeros on the far edges). The
// anisotropic |dx| + |dy| variant is not used anywhere here.
double total_variation(const Image& x);

// Mean squared intensity difference.
double mse(const Image& a, const Image& b);

}  // namespace icfp
