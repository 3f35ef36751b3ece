#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "modeseek/bandwidth.hpp"
#include "modeseek/layout.hpp"
#include "modeseek/point_set.hpp"

using namespace modeseek;

TEST_CASE("layout slices are contiguous and sum to the total dimension") {
  FeatureSpaceLayout layout({2, 3, 1});
  CHECK(layout.domain_count() == 3);
  CHECK(layout.total_dim() == 6);
  CHECK(layout.domain_offset(0) == 0);
  CHECK(layout.domain_offset(1) == 2);
  CHECK(layout.domain_offset(2) == 5);
  CHECK_THROWS_AS(FeatureSpaceLayout(std::vector<std::size_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(FeatureSpaceLayout({2, 0}), std::invalid_argument);
}

TEST_CASE("point set validates shape and finiteness") {
  FeatureSpaceLayout layout({2});
  CHECK_THROWS_AS(PointSet::from_rows({}, layout), std::invalid_argument);
  CHECK_THROWS_AS(PointSet::from_rows({{1.0}}, layout), std::invalid_argument);
  CHECK_THROWS_AS(
      PointSet::from_rows({{1.0, std::numeric_limits<double>::quiet_NaN()}}, layout),
      std::invalid_argument);

  PointSet set = PointSet::from_rows({{1.0, 2.0}, {3.0, 4.0}}, layout);
  CHECK(set.size() == 2);
  CHECK(set.point(1) == std::vector<double>{3.0, 4.0});
  CHECK(set.column(0)[0] == 1.0);
  CHECK(set.column(1)[1] == 4.0);
}

TEST_CASE("compose_bandwidth concatenates per-domain blocks") {
  FeatureSpaceLayout layout({2, 3});
  BandwidthMatrix H = compose_bandwidth({{4, 4}, {9, 9, 9}}, layout);
  CHECK(H.diag() == std::vector<double>{4, 4, 9, 9, 9});

  BandwidthMatrix single = compose_bandwidth({{2.5}}, FeatureSpaceLayout({1}));
  CHECK(single.diag() == std::vector<double>{2.5});

  CHECK_THROWS_AS(compose_bandwidth({{1, 1}, {-1, 1, 1}}, layout), std::domain_error);
  CHECK_THROWS_AS(compose_bandwidth({{1, 1}}, layout), std::invalid_argument);
  CHECK_THROWS_AS(compose_bandwidth({{1}, {1, 1, 1}}, layout), std::invalid_argument);
}

TEST_CASE("compose then slice recovers the blocks exactly") {
  FeatureSpaceLayout layout({1, 2, 3});
  std::vector<std::vector<double>> blocks = {{0.25}, {7.5, 1e-3}, {100, 200, 300}};
  BandwidthMatrix H = compose_bandwidth(blocks, layout);
  for (std::size_t p = 0; p < layout.domain_count(); ++p) {
    CHECK(H.block(layout, p) == blocks[p]);
  }
}

TEST_CASE("mahalanobis_sq matches hand evaluations") {
  BandwidthMatrix H2(std::vector<double>{4, 1});
  const std::vector<double> a = {3, 7};
  CHECK(mahalanobis_sq(a, a, H2) == 0.0);

  CHECK(mahalanobis_sq(std::vector<double>{2, 0}, std::vector<double>{0, 0}, H2) == 1.0);

  BandwidthMatrix I2(std::vector<double>{1, 1});
  CHECK(mahalanobis_sq(std::vector<double>{1, 1}, std::vector<double>{0, 0}, I2) == 2.0);

  CHECK_THROWS_AS(mahalanobis_sq(std::vector<double>{1}, std::vector<double>{0, 0}, I2),
                  std::invalid_argument);
}

TEST_CASE("mahalanobis_sq symmetry and inverse bandwidth scaling") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  std::uniform_real_distribution<double> bw(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 5);
    std::vector<double> x(d), y(d), h(d), h2(d);
    for (std::size_t k = 0; k < d; ++k) {
      x[k] = coord(rng);
      y[k] = coord(rng);
      h[k] = bw(rng);
      h2[k] = 2.0 * h[k];
    }
    BandwidthMatrix H(h), Hdoubled(h2);
    const double dxy = mahalanobis_sq(x, y, H);
    const double dyx = mahalanobis_sq(y, x, H);
    CHECK(dxy == Catch::Approx(dyx).epsilon(1e-12));
    CHECK(mahalanobis_sq(x, y, Hdoubled) == Catch::Approx(0.5 * dxy).epsilon(1e-12));
  }
}

TEST_CASE("bandwidth matrix rejects non-positive and non-finite entries") {
  CHECK_THROWS_AS(BandwidthMatrix(std::vector<double>{1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(BandwidthMatrix(std::vector<double>{-2.0}), std::domain_error);
  CHECK_THROWS_AS(BandwidthMatrix(std::vector<double>{std::numeric_limits<double>::infinity()}),
                  std::domain_error);
  CHECK_THROWS_AS(BandwidthMatrix(std::vector<double>{}), std::invalid_argument);
}
