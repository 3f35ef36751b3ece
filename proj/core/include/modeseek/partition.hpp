#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace modeseek {

/// Result of a mean shift partitioning: a dense cluster label per point
/// (assigned in first-seen order over point index 0..n-1), the converged mode
/// per point, and per-point convergence flags. Modes are stored row-major.
struct Partition {
  std::vector<std::size_t> labels;
  std::vector<double> modes;  // n * dim, row-major
  std::size_t dim = 0;
  std::size_t cluster_count = 0;
  std::vector<std::uint8_t> converged;  // per point; 0 when max_iters was hit

  std::size_t size() const { return labels.size(); }

  std::span<const double> mode(std::size_t i) const {
    return {modes.data() + i * dim, dim};
  }

  std::size_t non_converged_count() const {
    std::size_t c = 0;
    for (auto f : converged) {
      c += (f == 0);
    }
    return c;
  }
};

}  // namespace modeseek
