#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modeseek/layout.hpp"

namespace modeseek {

/// Immutable-after-construction set of n points in the d-dimensional feature
/// space. Storage is coordinate-major: column(k) is the contiguous array of
/// the k-th coordinate over all points, which is what the O(n^2) kernel sums
/// iterate over.
class PointSet {
public:
  PointSet(std::size_t n, FeatureSpaceLayout layout);

  /// Builds from row vectors (one per point). Rejects empty input, length
  /// mismatches, and non-finite coordinates.
  static PointSet from_rows(const std::vector<std::vector<double>>& rows,
                            FeatureSpaceLayout layout);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return layout_.total_dim(); }
  const FeatureSpaceLayout& layout() const { return layout_; }

  double coord(std::size_t i, std::size_t k) const { return cols_[k * n_ + i]; }
  std::span<const double> column(std::size_t k) const {
    return {cols_.data() + k * n_, n_};
  }

  std::vector<double> point(std::size_t i) const;
  void set_point(std::size_t i, std::span<const double> values);

private:
  std::size_t n_;
  FeatureSpaceLayout layout_;
  std::vector<double> cols_;  // [k * n + i]
};

}  // namespace modeseek
