#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "modeseek/point_set.hpp"

namespace modeseek::tools {

struct MixtureComponent {
  std::size_t count = 0;
  std::vector<double> mean;
  std::vector<double> sigma;  // per-axis standard deviation
};

// Box-Muller instead of std::normal_distribution so that a seed produces the
// same cloud on every standard library.
inline double standard_normal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(std::numeric_limits<double>::min(), 1.0);
  const double u1 = unit(rng);
  const double u2 = unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline std::vector<std::vector<double>> sample_mixture(
    std::uint64_t seed, const std::vector<MixtureComponent>& components) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> rows;
  for (const auto& c : components) {
    for (std::size_t i = 0; i < c.count; ++i) {
      std::vector<double> p(c.mean.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = c.mean[k] + c.sigma[k] * standard_normal(rng);
      }
      rows.push_back(std::move(p));
    }
  }
  return rows;
}

inline std::vector<std::size_t> mixture_truth(const std::vector<MixtureComponent>& components) {
  std::vector<std::size_t> truth;
  for (std::size_t c = 0; c < components.size(); ++c) {
    truth.insert(truth.end(), components[c].count, c);
  }
  return truth;
}

}  // namespace modeseek::tools
