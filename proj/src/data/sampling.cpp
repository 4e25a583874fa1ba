#include "aupc/data/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aupc/core/error.hpp"
#include "aupc/data/rng.hpp"

namespace aupc {

namespace {

// First `count` entries of a seeded Fisher-Yates shuffle of [0, n).
std::vector<std::size_t> draw_without_replacement(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  Rng rng(seed);
  count = std::min(count, n);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

void SubsampleConfig::validate() const {
  if (!(rate > 0.0 && rate <= 1.0)) throw InvalidArgument("subsample rate must lie in (0, 1]");
}

std::vector<OutlierScore> outlier_scores(const NormalizedDataset& d, const OutlierConfig& oc) {
  const std::size_t r = d.rows();
  if (oc.reference_size == 0) throw InvalidArgument("outlier reference size must be >= 1");
  if (r == 0) return {};
  if (oc.reference_size > r) throw InvalidArgument("outlier reference size exceeds row count");

  const auto reference = draw_without_replacement(r, oc.reference_size, oc.seed);
  std::vector<OutlierScore> scores(r);
  for (std::size_t i = 0; i < r; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j : reference) {
      if (j == i) continue;
      best = std::min(best, squared_distance(d.data.row(i), d.data.row(j)));
    }
    // A one-record reference sample leaves that record without neighbours.
    scores[i] = {i, std::isfinite(best) ? std::sqrt(best) : 0.0};
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const OutlierScore& a, const OutlierScore& b) { return a.score > b.score; });
  return scores;
}

SubsampleResult subsample(const NormalizedDataset& d, const SubsampleConfig& sc, const OutlierConfig& oc) {
  sc.validate();
  const std::size_t r = d.rows();
  if (oc.k > r) throw InvalidArgument("outlier count k exceeds row count");

  const auto count = static_cast<std::size_t>(std::llround(sc.rate * static_cast<double>(r)));
  SubsampleResult out;
  out.indices = draw_without_replacement(r, count, sc.seed);
  if (oc.k > 0) {
    const auto scores = outlier_scores(d, oc);
    for (std::size_t i = 0; i < oc.k; ++i) out.outliers.push_back(scores[i].index);
    out.indices.insert(out.indices.end(), out.outliers.begin(), out.outliers.end());
  }
  std::sort(out.indices.begin(), out.indices.end());
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()), out.indices.end());
  return out;
}

}  // namespace aupc
