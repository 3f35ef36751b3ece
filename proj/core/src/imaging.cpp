#include "modeseek/imaging.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace modeseek {

PointSet image_to_features(const RasterImage& img) {
  if (img.width == 0 || img.height == 0) {
    throw std::invalid_argument("image_to_features: image has a zero dimension");
  }
  if (img.pixels.size() != 3 * img.width * img.height) {
    throw std::invalid_argument("image_to_features: pixel buffer size mismatch");
  }
  PointSet set(img.width * img.height,
               FeatureSpaceLayout(std::vector<std::size_t>{1, 1, 1, 1, 1}));
  double point[5];
  for (std::size_t row = 0; row < img.height; ++row) {
    for (std::size_t col = 0; col < img.width; ++col) {
      const std::uint8_t* px = img.pixel(col, row);
      point[0] = static_cast<double>(col);
      point[1] = static_cast<double>(row);
      point[2] = static_cast<double>(px[0]);
      point[3] = static_cast<double>(px[1]);
      point[4] = static_cast<double>(px[2]);
      set.set_point(row * img.width + col, point);
    }
  }
  return set;
}

namespace {

std::uint8_t to_channel(double v) {
  const double r = std::floor(v + 0.5);  // round half-up
  if (r < 0.0) {
    return 0;
  }
  if (r > 255.0) {
    return 255;
  }
  return static_cast<std::uint8_t>(r);
}

}  // namespace

RasterImage render_segmentation(std::size_t width, std::size_t height,
                                const Partition& partition) {
  if (partition.size() != width * height) {
    throw std::invalid_argument("render_segmentation: partition size does not match image");
  }
  if (partition.dim != 5) {
    throw std::invalid_argument("render_segmentation: partition is not over 5-D image features");
  }
  RasterImage img(width, height);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const auto mode = partition.mode(i);
    std::uint8_t* px = img.pixels.data() + 3 * i;
    px[0] = to_channel(mode[2]);
    px[1] = to_channel(mode[3]);
    px[2] = to_channel(mode[4]);
  }
  return img;
}

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_header_token(const std::string& bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    const char c = bytes[pos];
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') {
        ++pos;
      }
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
    } else {
      break;
    }
  }
  const std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    ++pos;
  }
  if (start == pos) {
    throw PpmParseError("ppm: unexpected end of header", start);
  }
  return bytes.substr(start, pos - start);
}

std::size_t parse_header_number(const std::string& bytes, std::size_t& pos,
                                const char* what) {
  const std::size_t at = pos;
  const std::string tok = next_header_token(bytes, pos);
  std::size_t value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') {
      throw PpmParseError(std::string("ppm: malformed ") + what, at);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

RasterImage load_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("ppm: cannot open '" + path + "' for reading");
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::size_t pos = 0;
  const std::string magic = next_header_token(bytes, pos);
  if (magic != "P6") {
    throw PpmParseError("ppm: unsupported format '" + magic + "', only binary P6 is supported", 0);
  }
  const std::size_t width = parse_header_number(bytes, pos, "width");
  const std::size_t height = parse_header_number(bytes, pos, "height");
  const std::size_t maxval_at = pos;
  const std::size_t maxval = parse_header_number(bytes, pos, "maxval");
  if (width == 0 || height == 0) {
    throw PpmParseError("ppm: zero image dimension", 0);
  }
  if (maxval != 255) {
    throw PpmParseError("ppm: maxval must be 255, got " + std::to_string(maxval), maxval_at);
  }
  if (pos >= bytes.size()) {
    throw PpmParseError("ppm: missing pixel payload", pos);
  }
  ++pos;  // single whitespace after maxval

  const std::size_t expected = 3 * width * height;
  const std::size_t available = bytes.size() - pos;
  if (available < expected) {
    throw PpmParseError("ppm: truncated payload, expected " + std::to_string(expected) +
                            " bytes but found " + std::to_string(available),
                        pos);
  }

  RasterImage img(width, height);
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
            bytes.begin() + static_cast<std::ptrdiff_t>(pos + expected), img.pixels.begin());
  return img;
}

void save_ppm(const RasterImage& img, const std::string& path) {
  if (img.width == 0 || img.height == 0 ||
      img.pixels.size() != 3 * img.width * img.height) {
    throw std::invalid_argument("ppm: refusing to write malformed image");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("ppm: cannot open '" + path + "' for writing");
  }
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) {
    throw std::runtime_error("ppm: write failed for '" + path + "'");
  }
}

}  // namespace modeseek
