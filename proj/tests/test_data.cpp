#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <numbers>
#include <set>

#include "aupc/core/error.hpp"
#include "aupc/data/dataset.hpp"
#include "aupc/data/rng.hpp"
#include "aupc/data/sampling.hpp"
#include "aupc/data/synthetic.hpp"

using namespace aupc;

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

NormalizedDataset blob_with_outlier(std::size_t rows, std::size_t planted, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> values;
  for (std::size_t i = 0; i < rows; ++i) {
    for (int c = 0; c < 3; ++c) values.push_back(i == planted ? 10.0 : rng.normal());
  }
  return normalize(Dataset({"a", "b", "c"}, values));
}

// Exact nearest-neighbour distance over all other records.
std::vector<double> exact_nn(const NormalizedDataset& d) {
  std::vector<double> out(d.rows(), INFINITY);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.rows(); ++j) {
      if (i == j) continue;
      double s = 0.0;
      for (std::size_t c = 0; c < d.columns(); ++c) s += std::pow(d.data.at(i, c) - d.data.at(j, c), 2);
      out[i] = std::min(out[i], std::sqrt(s));
    }
  }
  return out;
}

// Least-squares angle of y on x in degrees, after centring each group.
double ols_angle(const SyntheticData& s, auto&& keep) {
  std::map<std::size_t, std::pair<double, double>> mean;
  std::map<std::size_t, std::size_t> count;
  for (std::size_t r = 0; r < s.data.rows(); ++r) {
    if (!keep(r)) continue;
    mean[s.segment[r]].first += s.data.at(r, 0);
    mean[s.segment[r]].second += s.data.at(r, 1);
    ++count[s.segment[r]];
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t r = 0; r < s.data.rows(); ++r) {
    if (!keep(r)) continue;
    const auto n = static_cast<double>(count[s.segment[r]]);
    const double dx = s.data.at(r, 0) - mean[s.segment[r]].first / n;
    const double dy = s.data.at(r, 1) - mean[s.segment[r]].second / n;
    sxy += dx * dy;
    sxx += dx * dx;
  }
  return std::atan2(sxy, sxx) / kDegree;
}

}  // namespace

TEST_CASE("parse_csv") {
  SUBCASE("header plus three rows") {
    const auto r = parse_csv("a,b,c,d\n1,2,3,4\n5,6,7,8\n9,10,11,12\n");
    CHECK(r.data.rows() == 3);
    CHECK(r.data.columns() == 4);
    CHECK(r.data.at(2, 3) == 12.0);
    CHECK(r.report.rows_read == 3);
    CHECK(r.report.rows_dropped == 0);
  }
  SUBCASE("NaN and empty cells drop the row") {
    const auto r = parse_csv("a,b\n1,2\nNaN,3\n4,\n5,6\n");
    CHECK(r.data.rows() == 2);
    CHECK(r.report.rows_dropped == 2);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_csv("a\n1\n2\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_csv("a,b\nx,y\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_csv("a,a\n1,2\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_csv(""), InvalidArgument);
  }
}

TEST_CASE("csv files round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "aupc_test_data";
  std::filesystem::create_directories(dir);
  const Dataset d({"x", "y"}, {0.1, 0.25, 1e-17, 3.0, -2.5, 1e12});
  write_csv(d, dir / "d.csv");
  CHECK(load_csv(dir / "d.csv").data == d);
  CHECK_THROWS_AS(load_csv(dir / "missing.csv"), IoError);
  CHECK_THROWS_AS(write_csv(d, dir / "no_such_dir" / "d.csv"), IoError);
}

TEST_CASE("normalize") {
  const Dataset d({"a", "b", "c"}, {2, 7, -1, 4, 7, 3, 6, 7, 0});
  const NormalizedDataset n = normalize(d);
  CHECK(n.data.column(0) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(n.data.column(1) == std::vector<double>{0.5, 0.5, 0.5});
  CHECK(n.data.column(2) == std::vector<double>{0.0, 1.0, 0.25});
  CHECK(n.original[0].min == 2.0);
  CHECK(n.original[0].max == 6.0);
  CHECK(normalize(n.data).data == n.data);
  CHECK(n.pairs() == 2);

  SUBCASE("rank order is preserved") {
    Rng rng(4);
    std::vector<double> v;
    for (int i = 0; i < 400; ++i) v.push_back(rng.uniform(-50.0, 80.0));
    const NormalizedDataset m = normalize(Dataset({"a", "b"}, v));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.rows(); ++j) {
        if (v[2 * i] < v[2 * j]) CHECK(m.data.at(i, 0) <= m.data.at(j, 0));
      }
      CHECK(m.data.at(i, 0) >= 0.0);
      CHECK(m.data.at(i, 0) <= 1.0);
    }
  }
}

TEST_CASE("reorder_axes") {
  const Dataset d({"a", "b", "c"}, {1, 2, 3, 4, 5, 6});
  const std::vector<std::size_t> identity{0, 1, 2}, swap{1, 0, 2}, rotate{2, 0, 1};
  CHECK(reorder_axes(d, identity) == d);
  CHECK(reorder_axes(reorder_axes(d, swap), swap) == d);
  const Dataset r = reorder_axes(d, rotate);
  CHECK(r.names() == std::vector<std::string>{"c", "a", "b"});
  CHECK(r.at(1, 0) == 6.0);
  const std::vector<std::size_t> dup{0, 0, 1}, short_perm{0, 1}, out_of_range{0, 1, 3};
  CHECK_THROWS_AS(reorder_axes(d, dup), InvalidArgument);
  CHECK_THROWS_AS(reorder_axes(d, short_perm), InvalidArgument);
  CHECK_THROWS_AS(reorder_axes(d, out_of_range), InvalidArgument);
}

TEST_CASE("subsample") {
  const NormalizedDataset d = blob_with_outlier(1000, 999, 1);
  SUBCASE("5% of 1000 is 50 indices, stable per seed") {
    const auto a = subsample(d, {0.05, 42}, {0, 20, 0});
    const auto b = subsample(d, {0.05, 42}, {0, 20, 0});
    CHECK(a.indices.size() == 50);
    CHECK(a.indices == b.indices);
    CHECK(a.outliers.empty());
    CHECK(subsample(d, {0.05, 43}, {0, 20, 0}).indices != a.indices);
  }
  SUBCASE("rate 1 keeps everything") {
    CHECK(subsample(d, {1.0, 3}, {0, 20, 0}).indices.size() == 1000);
  }
  SUBCASE("indices are unique, sorted and in range") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto r = subsample(d, {0.1, seed}, {5, 20, seed + 1});
      CHECK(std::is_sorted(r.indices.begin(), r.indices.end()));
      CHECK(std::set<std::size_t>(r.indices.begin(), r.indices.end()).size() == r.indices.size());
      CHECK(r.indices.back() < d.rows());
      for (std::size_t o : r.outliers) CHECK(std::binary_search(r.indices.begin(), r.indices.end(), o));
    }
  }
  SUBCASE("planted outlier always survives with k = 1") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto r = subsample(d, {0.05, seed}, {1, 20, seed * 7 + 1});
      REQUIRE(r.outliers.size() == 1);
      CHECK(r.outliers[0] == 999);
      CHECK(std::binary_search(r.indices.begin(), r.indices.end(), std::size_t{999}));
    }
  }
  SUBCASE("bad configs") {
    CHECK_THROWS_AS(subsample(d, {0.0, 1}, {}), InvalidArgument);
    CHECK_THROWS_AS(subsample(d, {1.5, 1}, {}), InvalidArgument);
    CHECK_THROWS_AS(subsample(d, {0.5, 1}, {1001, 20, 0}), InvalidArgument);
  }
}

TEST_CASE("outlier_scores") {
  SUBCASE("identical records score 0") {
    const NormalizedDataset d = normalize(Dataset({"a", "b"}, std::vector<double>(200, 0.3)));
    for (const auto& s : outlier_scores(d, {5, 20, 1})) CHECK(s.score == 0.0);
  }
  SUBCASE("top-1 agrees with exact nearest-neighbour ranking") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const std::size_t planted = (seed * 37) % 400;
      const NormalizedDataset d = blob_with_outlier(400, planted, seed);
      const auto exact = exact_nn(d);
      const auto top_exact =
          static_cast<std::size_t>(std::max_element(exact.begin(), exact.end()) - exact.begin());
      const auto scores = outlier_scores(d, {1, 20, seed});
      CHECK(top_exact == planted);
      CHECK(scores[0].index == top_exact);
      for (const auto& s : scores) {
        CHECK(s.score >= 0.0);
        // A reference subset can only be farther than the nearest neighbour.
        CHECK(s.score >= exact[s.index] - 1e-15);
      }
      for (std::size_t i = 1; i < scores.size(); ++i) CHECK(scores[i - 1].score >= scores[i].score);
    }
  }
  SUBCASE("reference bigger than the data is rejected") {
    const NormalizedDataset d = blob_with_outlier(10, 0, 1);
    CHECK_THROWS_AS(outlier_scores(d, {1, 11, 0}), InvalidArgument);
    CHECK_THROWS_AS(outlier_scores(d, {1, 0, 0}), InvalidArgument);
    CHECK(outlier_scores(d, {1, 1, 0}).size() == 10);
  }
}

TEST_CASE("generate_synthetic") {
  SUBCASE("zero noise is collinear and reproduces the angle") {
    for (double angle : {-5.0, 15.0, 56.0, 30.0, 89.0}) {
      SyntheticSpec spec;
      spec.segments.push_back({angle, 0.5, 0.5, 0.3, 500, 0.0, 0});
      const SyntheticData s = generate_synthetic(spec, 9);
      const double c = std::cos(angle * kDegree), sn = std::sin(angle * kDegree);
      for (std::size_t r = 0; r < s.data.rows(); ++r) {
        // Perpendicular distance from the segment's line.
        CHECK(std::abs(-(s.data.at(r, 0) - 0.5) * sn + (s.data.at(r, 1) - 0.5) * c) < 1e-12);
      }
      CHECK(ols_angle(s, [](std::size_t) { return true; }) == doctest::Approx(angle).epsilon(1e-9).scale(1.0));
    }
  }
  SUBCASE("default spec clusters fit their angles within 1 degree") {
    const SyntheticSpec spec = default_synthetic_spec();
    CHECK(spec.segments.size() == 12);
    const SyntheticData s = generate_synthetic(spec, 7);
    CHECK(s.data.rows() == 15000);
    const std::pair<int, double> expected[] = {{kMinus5, -5.0}, {kDeg15, 15.0}, {kDeg56, 56.0}, {kDeg30, 30.0}};
    for (const auto& [structure, angle] : expected) {
      const double fit = ols_angle(s, [&](std::size_t r) { return s.structure[r] == structure; });
      CHECK(std::abs(fit - angle) < 1.0);
    }
    for (std::size_t r = 0; r < s.data.rows(); ++r) {
      CHECK(s.data.at(r, 0) >= 0.0);
      CHECK(s.data.at(r, 1) <= 1.0);
    }
  }
  SUBCASE("counts are exact and generation is deterministic") {
    SyntheticSpec spec;
    spec.segments.push_back({10.0, 0.5, 0.5, 0.2, 17, 0.01, 0});
    spec.segments.push_back({-40.0, 0.4, 0.6, 0.2, 5, 0.02, 1});
    const SyntheticData a = generate_synthetic(spec, 1);
    CHECK(a.data.rows() == 22);
    CHECK(std::count(a.structure.begin(), a.structure.end(), 1) == 5);
    CHECK(generate_synthetic(spec, 1).data == a.data);
    CHECK(!(generate_synthetic(spec, 2).data == a.data));
    CHECK(to_csv(generate_synthetic(default_synthetic_spec(), 3).data) ==
          to_csv(generate_synthetic(default_synthetic_spec(), 3).data));
  }
  SUBCASE("invalid specs") {
    SyntheticSpec spec;
    CHECK_THROWS_AS(generate_synthetic(spec, 1), InvalidArgument);
    spec.segments.push_back({-90.0, 0.5, 0.5, 0.2, 5, 0.0, 0});
    CHECK_THROWS_AS(generate_synthetic(spec, 1), InvalidArgument);
    spec.segments[0] = {10.0, 0.5, 0.5, 0.2, 0, 0.0, 0};
    CHECK_THROWS_AS(generate_synthetic(spec, 1), InvalidArgument);
    spec.segments[0] = {10.0, 0.5, 0.5, 0.2, 5, -0.1, 0};
    CHECK_THROWS_AS(generate_synthetic(spec, 1), InvalidArgument);
    spec.segments[0] = {10.0, 5.0, 5.0, 0.2, 5, 0.0, 0};
    CHECK_THROWS_AS(generate_synthetic(spec, 1), InvalidArgument);
  }
}

TEST_CASE("rng is a fixed xoshiro256** stream") {
  Rng a(0), b(0);
  Rng known(0);
  CHECK(known.next() == 0x99ec5f36cb75f2b4ULL);
  CHECK(known.next() == 0xbf6e1f784956452aULL);
  CHECK(known.next() == 0x1a5f849d4933e6e0ULL);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(12345);
  double mean = 0.0, var = 0.0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = c.normal();
    mean += x;
    var += x * x;
  }
  CHECK(std::abs(mean / n) < 0.01);
  CHECK(std::abs(var / n - 1.0) < 0.02);
  Rng u(3);
  for (int i = 0; i < 1000; ++i) CHECK(u.below(7) < 7);
}
