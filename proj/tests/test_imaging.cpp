#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "modeseek/imaging.hpp"

using namespace modeseek;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

RasterImage random_image(std::uint64_t seed, std::size_t w, std::size_t h) {
  std::mt19937_64 rng(seed);
  RasterImage img(w, h);
  for (auto& px : img.pixels) {
    px = static_cast<std::uint8_t>(rng() % 256);
  }
  return img;
}

Partition identity_partition(const PointSet& points) {
  Partition p;
  p.dim = points.dim();
  p.labels.assign(points.size(), 0);
  p.cluster_count = 1;
  p.converged.assign(points.size(), 1);
  p.modes.resize(points.size() * points.dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto pt = points.point(i);
    std::copy(pt.begin(), pt.end(), p.modes.begin() + i * p.dim);
  }
  return p;
}

}  // namespace

TEST_CASE("image_to_features lays points out row-major") {
  RasterImage one(1, 1);
  one.pixels = {10, 20, 30};
  PointSet p1 = image_to_features(one);
  CHECK(p1.size() == 1);
  CHECK(p1.point(0) == std::vector<double>{0, 0, 10, 20, 30});

  RasterImage two(2, 1);
  two.pixels = {1, 2, 3, 4, 5, 6};
  PointSet p2 = image_to_features(two);
  CHECK(p2.point(0) == std::vector<double>{0, 0, 1, 2, 3});
  CHECK(p2.point(1) == std::vector<double>{1, 0, 4, 5, 6});

  RasterImage big = random_image(5, 64, 64);
  PointSet pbig = image_to_features(big);
  CHECK(pbig.size() == 4096);
  CHECK(pbig.layout().domain_dims() == std::vector<std::size_t>{1, 1, 1, 1, 1});

  CHECK_THROWS_AS(image_to_features(RasterImage{}), std::invalid_argument);
}

TEST_CASE("point index maps back to pixel coordinates") {
  RasterImage img = random_image(9, 13, 7);
  PointSet points = image_to_features(img);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const std::size_t i = rng() % points.size();
    const auto pt = points.point(i);
    CHECK(pt[0] == static_cast<double>(i % img.width));
    CHECK(pt[1] == static_cast<double>(i / img.width));
  }
}

TEST_CASE("render_segmentation uses mode colors with half-up rounding") {
  RasterImage img = random_image(11, 6, 4);
  PointSet points = image_to_features(img);

  // identity modes reproduce the image exactly
  RasterImage back = render_segmentation(6, 4, identity_partition(points));
  CHECK(back.pixels == img.pixels);

  // single cluster with a fractional mode color
  Partition flat = identity_partition(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    flat.modes[i * 5 + 2] = 100.4;
    flat.modes[i * 5 + 3] = 200.6;
    flat.modes[i * 5 + 4] = -3.0;  // clamps to 0
  }
  RasterImage uniform = render_segmentation(6, 4, flat);
  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(uniform.pixels[3 * i + 0] == 100);
    CHECK(uniform.pixels[3 * i + 1] == 201);
    CHECK(uniform.pixels[3 * i + 2] == 0);
  }

  // two-cluster vertical split
  Partition split = identity_partition(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool left = (i % 6) < 3;
    split.labels[i] = left ? 0 : 1;
    split.modes[i * 5 + 2] = left ? 15.0 : 240.0;
    split.modes[i * 5 + 3] = left ? 15.0 : 240.0;
    split.modes[i * 5 + 4] = left ? 15.0 : 240.0;
  }
  split.cluster_count = 2;
  RasterImage halves = render_segmentation(6, 4, split);
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 6; ++col) {
      CHECK(halves.pixel(col, row)[0] == (col < 3 ? 15 : 240));
    }
  }

  CHECK_THROWS_AS(render_segmentation(5, 4, identity_partition(points)),
                  std::invalid_argument);
}

TEST_CASE("ppm round trip is bit-exact") {
  const auto path = temp_file("modeseek_roundtrip.ppm");
  RasterImage img = random_image(13, 37, 21);
  save_ppm(img, path.string());
  RasterImage loaded = load_ppm(path.string());
  CHECK(loaded.width == img.width);
  CHECK(loaded.height == img.height);
  CHECK(loaded.pixels == img.pixels);
  std::filesystem::remove(path);
}

TEST_CASE("ppm loader tolerates header comments") {
  const auto path = temp_file("modeseek_comments.ppm");
  {
    std::ofstream out(path, std::ios::binary);
    out << "P6\n# a comment line\n2 # trailing comment\n1\n255\n";
    const unsigned char payload[6] = {1, 2, 3, 4, 5, 6};
    out.write(reinterpret_cast<const char*>(payload), 6);
  }
  RasterImage img = load_ppm(path.string());
  CHECK(img.width == 2);
  CHECK(img.height == 1);
  CHECK(img.pixels == std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6});
  std::filesystem::remove(path);
}

TEST_CASE("ppm loader rejects malformed input") {
  const auto path = temp_file("modeseek_bad.ppm");

  {
    std::ofstream out(path, std::ios::binary);
    out << "P3\n2 1\n255\n1 2 3 4 5 6\n";
  }
  CHECK_THROWS_WITH(load_ppm(path.string()),
                    Catch::Matchers::ContainsSubstring("P3") &&
                        Catch::Matchers::ContainsSubstring("P6"));

  {
    std::ofstream out(path, std::ios::binary);
    out << "P6\n2 1\n65535\n";
  }
  CHECK_THROWS_WITH(load_ppm(path.string()),
                    Catch::Matchers::ContainsSubstring("maxval"));

  {
    std::ofstream out(path, std::ios::binary);
    out << "P6\n2 1\n255\n";
    const unsigned char payload[3] = {1, 2, 3};
    out.write(reinterpret_cast<const char*>(payload), 3);
  }
  CHECK_THROWS_WITH(load_ppm(path.string()),
                    Catch::Matchers::ContainsSubstring("expected 6") &&
                        Catch::Matchers::ContainsSubstring("found 3"));

  CHECK_THROWS_WITH(load_ppm("/nonexistent/missing.ppm"),
                    Catch::Matchers::ContainsSubstring("missing.ppm"));

  std::filesystem::remove(path);
}

TEST_CASE("integer pixel data survives the feature round trip") {
  RasterImage img = random_image(17, 9, 5);
  PointSet points = image_to_features(img);
  RasterImage back = render_segmentation(9, 5, identity_partition(points));
  CHECK(back.pixels == img.pixels);
}
