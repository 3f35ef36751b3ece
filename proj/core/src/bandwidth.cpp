#include "modeseek/bandwidth.hpp"

#include <cmath>
#include <stdexcept>

namespace modeseek {

BandwidthMatrix::BandwidthMatrix(std::vector<double> diag) : diag_(std::move(diag)) {
  if (diag_.empty()) {
    throw std::invalid_argument("BandwidthMatrix: empty diagonal");
  }
  for (double v : diag_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("BandwidthMatrix: entries must be positive and finite");
    }
  }
}

double BandwidthMatrix::sqrt_det() const {
  double p = 1.0;
  for (double v : diag_) {
    p *= std::sqrt(v);
  }
  return p;
}

std::vector<double> BandwidthMatrix::block(const FeatureSpaceLayout& layout,
                                           std::size_t p) const {
  if (layout.total_dim() != diag_.size()) {
    throw std::invalid_argument("BandwidthMatrix::block: layout dimension mismatch");
  }
  const std::size_t off = layout.domain_offset(p);
  const std::size_t len = layout.domain_dim(p);
  return {diag_.begin() + off, diag_.begin() + off + len};
}

BandwidthMatrix compose_bandwidth(const std::vector<std::vector<double>>& blocks,
                                  const FeatureSpaceLayout& layout) {
  if (blocks.size() != layout.domain_count()) {
    throw std::invalid_argument("compose_bandwidth: block count does not match layout");
  }
  std::vector<double> diag;
  diag.reserve(layout.total_dim());
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    if (blocks[p].size() != layout.domain_dim(p)) {
      throw std::invalid_argument("compose_bandwidth: block length does not match domain");
    }
    diag.insert(diag.end(), blocks[p].begin(), blocks[p].end());
  }
  return BandwidthMatrix(std::move(diag));  // positivity enforced here
}

double mahalanobis_sq(std::span<const double> x, std::span<const double> y,
                      const BandwidthMatrix& H) {
  if (x.size() != y.size() || x.size() != H.dim()) {
    throw std::invalid_argument("mahalanobis_sq: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = x[k] - y[k];
    s += dx * dx / H.entry(k);
  }
  return s;
}

}  // namespace modeseek
