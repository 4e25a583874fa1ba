#include "aupc/kernels/density.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aupc/core/error.hpp"
#include "aupc/kernels/rasterize.hpp"

namespace aupc::kernels {

namespace {

void check(const Dataset& d, std::size_t pair, std::span<const std::size_t> rows) {
  if (pair + 1 >= d.columns()) throw InvalidArgument("pair index out of range");
  for (std::size_t r : rows) {
    if (r >= d.rows()) throw InvalidArgument("record index out of range");
  }
}

std::vector<double> grid_columns(const CanvasLayout& layout, const CurveSampler& sampler) {
  std::vector<double> gx(sampler.size());
  for (std::size_t i = 0; i < gx.size(); ++i) gx[i] = layout.grid_x(sampler.u()[i]);
  return gx;
}

void deposit_record(Image1& grid, const Dataset& d, std::size_t pair, std::size_t row,
                    const CanvasLayout& layout, const CurveSampler& sampler,
                    const std::vector<double>& gx) {
  const CartesianPoint2 p{d.at(row, pair), d.at(row, pair + 1)};
  GridPoint prev{gx[0], layout.grid_y(sampler.v(0, p))};
  for (std::size_t i = 1; i < gx.size(); ++i) {
    const GridPoint next{gx[i], layout.grid_y(sampler.v(i, p))};
    deposit_segment(grid, prev, next);
    prev = next;
  }
}

std::size_t count(const Dataset& d, std::span<const std::size_t> rows) {
  return rows.empty() ? d.rows() : rows.size();
}

std::size_t row_at(std::span<const std::size_t> rows, std::size_t i) {
  return rows.empty() ? i : rows[i];
}

}  // namespace

namespace serial {

Image1 accumulate(const Dataset& d, std::size_t pair, const CanvasLayout& layout,
                  const CurveSampler& sampler, std::span<const std::size_t> rows) {
  check(d, pair, rows);
  Image1 grid(layout.columns(), layout.rows());
  const auto gx = grid_columns(layout, sampler);
  const std::size_t n = count(d, rows);
  for (std::size_t i = 0; i < n; ++i) deposit_record(grid, d, pair, row_at(rows, i), layout, sampler, gx);
  return grid;
}

}  // namespace serial

namespace omp {

Image1 accumulate(const Dataset& d, std::size_t pair, const CanvasLayout& layout,
                  const CurveSampler& sampler, std::span<const std::size_t> rows) {
  check(d, pair, rows);
  Image1 total(layout.columns(), layout.rows());
  const auto gx = grid_columns(layout, sampler);
  const auto n = static_cast<long long>(count(d, rows));
#pragma omp parallel
  {
    Image1 local(layout.columns(), layout.rows());
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) {
      deposit_record(local, d, pair, row_at(rows, static_cast<std::size_t>(i)), layout, sampler, gx);
    }
#pragma omp critical(aupc_density_reduce)
    {
      auto& dst = total.cells();
      const auto& src = local.cells();
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
    }
  }
  return total;
}

}  // namespace omp

}  // namespace aupc::kernels
