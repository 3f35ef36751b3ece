#pragma once

#include <cstddef>
#include <vector>

namespace modeseek {

/// Record of one mode-seeking run: the visited points y(1)..y(tm) and the
/// density estimate at each of them. steps.front() is the starting point,
/// steps.back() the reported mode. Densities are nondecreasing along the
/// trajectory (up to floating-point tolerance) for the fixed and
/// pseudo-balloon variants.
struct Trajectory {
  std::vector<std::vector<double>> steps;
  std::vector<double> densities;
  bool converged = true;

  std::size_t length() const { return steps.size(); }
  const std::vector<double>& mode() const { return steps.back(); }
};

}  // namespace modeseek
