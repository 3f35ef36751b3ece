#pragma once

#include <cstddef>
#include <vector>

namespace modeseek {

/// Partition of the d-dimensional feature space into P contiguous independent
/// domains. Domain p occupies the coordinate slice
/// [domain_offset(p), domain_offset(p) + domain_dim(p)).
class FeatureSpaceLayout {
public:
  /// Empty placeholder; assign a real layout before use.
  FeatureSpaceLayout() = default;

  explicit FeatureSpaceLayout(std::vector<std::size_t> domain_dims);

  /// One domain covering all `dim` coordinates.
  static FeatureSpaceLayout single(std::size_t dim);

  std::size_t domain_count() const { return dims_.size(); }
  std::size_t domain_dim(std::size_t p) const;
  std::size_t domain_offset(std::size_t p) const;
  std::size_t total_dim() const { return total_; }
  const std::vector<std::size_t>& domain_dims() const { return dims_; }

  bool operator==(const FeatureSpaceLayout& other) const {
    return dims_ == other.dims_;
  }

private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// Half-open coordinate slice [offset, offset + count) of the feature space.
struct CoordSlice {
  std::size_t offset = 0;
  std::size_t count = 0;
};

}  // namespace modeseek
