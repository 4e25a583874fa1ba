#pragma once

#include "aupc/render/image.hpp"

namespace aupc::kernels {

// Smaller eigenvalue of the window-summed structure tensor at every pixel,
// clamped to >= 0, not normalized. Gradients are central differences with
// replicated borders; the window is clipped at the image edge. Both versions
// do the same arithmetic per pixel, so their results are identical.
namespace serial {
Image1 min_eigenvalue(const Image1& img, int window);
}
namespace omp {
Image1 min_eigenvalue(const Image1& img, int window);
}

}  // namespace aupc::kernels
