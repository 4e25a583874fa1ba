#include "aupc/kernels/corner.hpp"

#include <algorithm>
#include <cmath>

#include "aupc/core/error.hpp"

namespace aupc::kernels {

namespace {

struct Tensor {
  Image1 xx, xy, yy;
};

void check(const Image1& img, int window) {
  if (window < 3 || window % 2 == 0) throw InvalidArgument("corner window must be an odd integer >= 3");
  if (img.width() < window || img.height() < window) {
    throw InvalidArgument("image is smaller than the corner window");
  }
}

// Gradient products for row y.
void gradient_row(const Image1& img, Tensor& t, int y) {
  const int w = img.width();
  const int h = img.height();
  const int ym = std::max(0, y - 1);
  const int yp = std::min(h - 1, y + 1);
  for (int x = 0; x < w; ++x) {
    const int xm = std::max(0, x - 1);
    const int xp = std::min(w - 1, x + 1);
    const double gx = 0.5 * (img(xp, y) - img(xm, y));
    const double gy = 0.5 * (img(x, yp) - img(x, ym));
    t.xx(x, y) = gx * gx;
    t.xy(x, y) = gx * gy;
    t.yy(x, y) = gy * gy;
  }
}

// Horizontal window sums of row y of src into dst.
void box_row(const Image1& src, Image1& dst, int y, int r) {
  const int w = src.width();
  for (int x = 0; x < w; ++x) {
    double s = 0.0;
    for (int k = std::max(0, x - r); k <= std::min(w - 1, x + r); ++k) s += src(k, y);
    dst(x, y) = s;
  }
}

double column_sum(const Image1& src, int x, int y, int r) {
  double s = 0.0;
  for (int k = std::max(0, y - r); k <= std::min(src.height() - 1, y + r); ++k) s += src(x, k);
  return s;
}

void eigen_row(const Tensor& rows, Image1& out, int y, int r) {
  for (int x = 0; x < out.width(); ++x) {
    const double a = column_sum(rows.xx, x, y, r);
    const double b = column_sum(rows.xy, x, y, r);
    const double c = column_sum(rows.yy, x, y, r);
    const double half_diff = 0.5 * (a - c);
    const double m = 0.5 * (a + c) - std::sqrt(half_diff * half_diff + b * b);
    out(x, y) = std::max(0.0, m);
  }
}

Tensor make_tensor(const Image1& img) {
  return {Image1(img.width(), img.height()), Image1(img.width(), img.height()),
          Image1(img.width(), img.height())};
}

}  // namespace

namespace serial {

Image1 min_eigenvalue(const Image1& img, int window) {
  check(img, window);
  const int r = window / 2;
  Tensor g = make_tensor(img);
  Tensor rows = make_tensor(img);
  Image1 out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) gradient_row(img, g, y);
  for (int y = 0; y < img.height(); ++y) {
    box_row(g.xx, rows.xx, y, r);
    box_row(g.xy, rows.xy, y, r);
    box_row(g.yy, rows.yy, y, r);
  }
  for (int y = 0; y < img.height(); ++y) eigen_row(rows, out, y, r);
  return out;
}

}  // namespace serial

namespace omp {

Image1 min_eigenvalue(const Image1& img, int window) {
  check(img, window);
  const int r = window / 2;
  const int h = img.height();
  Tensor g = make_tensor(img);
  Tensor rows = make_tensor(img);
  Image1 out(img.width(), h);
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) gradient_row(img, g, y);
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) {
      box_row(g.xx, rows.xx, y, r);
      box_row(g.xy, rows.xy, y, r);
      box_row(g.yy, rows.yy, y, r);
    }
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) eigen_row(rows, out, y, r);
  }
  return out;
}

}  // namespace omp

}  // namespace aupc::kernels
