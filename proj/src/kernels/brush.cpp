#include "aupc/kernels/brush.hpp"

#include <algorithm>
#include <cstdint>

namespace aupc::kernels {

namespace {

struct Box {
  double u0, u1, v0, v1;
};

Box bounds(const LassoRegion& lasso) {
  Box b{lasso.polygon[0].u, lasso.polygon[0].u, lasso.polygon[0].v, lasso.polygon[0].v};
  for (const auto& p : lasso.polygon) {
    b.u0 = std::min(b.u0, p.u);
    b.u1 = std::max(b.u1, p.u);
    b.v0 = std::min(b.v0, p.v);
    b.v1 = std::max(b.v1, p.v);
  }
  return b;
}

bool hits_lasso(TransformedPoint a, TransformedPoint b, const LassoRegion& lasso, const Box& box) {
  // Both ends on one side of the bounding box: no contact possible.
  if ((a.u < box.u0 && b.u < box.u0) || (a.u > box.u1 && b.u > box.u1) || (a.v < box.v0 && b.v < box.v0) ||
      (a.v > box.v1 && b.v > box.v1)) {
    return false;
  }
  if (point_in_polygon(a, lasso.polygon) || point_in_polygon(b, lasso.polygon)) return true;
  const auto& poly = lasso.polygon;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    if (segments_cross(a, b, poly[j], poly[i])) return true;
  }
  return false;
}

bool record_hits(const Dataset& d, std::size_t row, const BrushRegion& region, const CurveSampler& sampler,
                 const Box* lasso_box) {
  const std::size_t pair = region_pair(region);
  const CartesianPoint2 p{d.at(row, pair), d.at(row, pair + 1)};
  const auto u = sampler.u();
  TransformedPoint prev{u[0], sampler.v(0, p)};
  for (std::size_t i = 1; i < sampler.size(); ++i) {
    const TransformedPoint next{u[i], sampler.v(i, p)};
    const bool hit = lasso_box ? hits_lasso(prev, next, std::get<LassoRegion>(region), *lasso_box)
                               : segment_hits_rect(prev, next, std::get<RectRegion>(region));
    if (hit) return true;
    prev = next;
  }
  return false;
}

std::vector<std::size_t> collect(const std::vector<std::uint8_t>& marks) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i]) ids.push_back(i);
  }
  return ids;
}

}  // namespace

namespace serial {

std::vector<std::size_t> select(const Dataset& d, const BrushRegion& region, const CurveSampler& sampler) {
  const auto* lasso = std::get_if<LassoRegion>(&region);
  const Box box = lasso ? bounds(*lasso) : Box{};
  std::vector<std::uint8_t> marks(d.rows(), 0);
  for (std::size_t r = 0; r < d.rows(); ++r) marks[r] = record_hits(d, r, region, sampler, lasso ? &box : nullptr);
  return collect(marks);
}

}  // namespace serial

namespace omp {

std::vector<std::size_t> select(const Dataset& d, const BrushRegion& region, const CurveSampler& sampler) {
  const auto* lasso = std::get_if<LassoRegion>(&region);
  const Box box = lasso ? bounds(*lasso) : Box{};
  const auto n = static_cast<long long>(d.rows());
  std::vector<std::uint8_t> marks(d.rows(), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (long long r = 0; r < n; ++r) {
    marks[static_cast<std::size_t>(r)] =
        record_hits(d, static_cast<std::size_t>(r), region, sampler, lasso ? &box : nullptr);
  }
  return collect(marks);
}

}  // namespace omp

}  // namespace aupc::kernels
