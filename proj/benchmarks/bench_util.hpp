#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "modeseek/modeseek.hpp"

namespace benchutil {

inline double standard_normal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(std::numeric_limits<double>::min(), 1.0);
  return std::sqrt(-2.0 * std::log(unit(rng))) *
         std::cos(2.0 * std::numbers::pi * unit(rng));
}

// `clusters` blobs of `per_cluster` points on a coarse grid, unit spread.
inline modeseek::PointSet blob_cloud(std::uint64_t seed, std::size_t dim,
                                     std::size_t clusters, std::size_t per_cluster) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> rows;
  rows.reserve(clusters * per_cluster);
  for (std::size_t c = 0; c < clusters; ++c) {
    std::vector<double> center(dim);
    for (auto& v : center) {
      v = static_cast<double>(rng() % 5) * 10.0;
    }
    for (std::size_t i = 0; i < per_cluster; ++i) {
      std::vector<double> p(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        p[k] = center[k] + standard_normal(rng);
      }
      rows.push_back(std::move(p));
    }
  }
  return modeseek::PointSet::from_rows(
      rows, modeseek::FeatureSpaceLayout(std::vector<std::size_t>{dim}));
}

}  // namespace benchutil
