#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "modeseek/partition.hpp"
#include "modeseek/point_set.hpp"

namespace modeseek {

/// 8-bit RGB raster, row-major.
struct RasterImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height

  RasterImage() = default;
  RasterImage(std::size_t w, std::size_t h)
      : width(w), height(h), pixels(3 * w * h, 0) {}

  std::uint8_t* pixel(std::size_t col, std::size_t row) {
    return pixels.data() + 3 * (row * width + col);
  }
  const std::uint8_t* pixel(std::size_t col, std::size_t row) const {
    return pixels.data() + 3 * (row * width + col);
  }
};

struct PpmParseError : std::runtime_error {
  PpmParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

/// One 5-D point per pixel, row-major: [col, row, R, G, B], with five 1-D
/// domains.
PointSet image_to_features(const RasterImage& img);

/// Colors pixel (col,row) with the RGB coordinates of its point's converged
/// mode, rounded half-up and clamped to [0,255].
RasterImage render_segmentation(std::size_t width, std::size_t height,
                                const Partition& partition);

/// Binary PPM (P6, maxval 255). Header comments are tolerated on load; save
/// then load round-trips bit-exactly.
RasterImage load_ppm(const std::string& path);
void save_ppm(const RasterImage& img, const std::string& path);

}  // namespace modeseek
