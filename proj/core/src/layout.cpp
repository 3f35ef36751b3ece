#include "modeseek/layout.hpp"

#include <stdexcept>

namespace modeseek {

FeatureSpaceLayout::FeatureSpaceLayout(std::vector<std::size_t> domain_dims)
    : dims_(std::move(domain_dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("FeatureSpaceLayout: needs at least one domain");
  }
  offsets_.reserve(dims_.size());
  for (std::size_t d : dims_) {
    if (d == 0) {
      throw std::invalid_argument("FeatureSpaceLayout: domain dimension must be >= 1");
    }
    offsets_.push_back(total_);
    total_ += d;
  }
}

FeatureSpaceLayout FeatureSpaceLayout::single(std::size_t dim) {
  return FeatureSpaceLayout(std::vector<std::size_t>{dim});
}

std::size_t FeatureSpaceLayout::domain_dim(std::size_t p) const {
  if (p >= dims_.size()) {
    throw std::invalid_argument("FeatureSpaceLayout: domain index out of range");
  }
  return dims_[p];
}

std::size_t FeatureSpaceLayout::domain_offset(std::size_t p) const {
  if (p >= offsets_.size()) {
    throw std::invalid_argument("FeatureSpaceLayout: domain index out of range");
  }
  return offsets_[p];
}

}  // namespace modeseek
