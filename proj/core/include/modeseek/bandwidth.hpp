#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modeseek/layout.hpp"

namespace modeseek {

/// Diagonal positive-definite bandwidth matrix H. Entries are in squared
/// units of the corresponding coordinate. Diagonality makes H^{-1} and
/// |H|^{1/2} exact and satisfies H^T = H by construction.
class BandwidthMatrix {
public:
  explicit BandwidthMatrix(std::vector<double> diag);

  std::size_t dim() const { return diag_.size(); }
  double entry(std::size_t k) const { return diag_[k]; }
  const std::vector<double>& diag() const { return diag_; }

  /// Product of the square roots of the diagonal entries.
  double sqrt_det() const;

  /// The diagonal entries of domain p's block.
  std::vector<double> block(const FeatureSpaceLayout& layout, std::size_t p) const;

  bool operator==(const BandwidthMatrix& other) const = default;

private:
  std::vector<double> diag_;
};

/// Assembles the diagonal H whose slice for domain p equals blocks[p].
/// blocks must have exactly layout.domain_count() entries of the matching
/// per-domain lengths.
BandwidthMatrix compose_bandwidth(const std::vector<std::vector<double>>& blocks,
                                  const FeatureSpaceLayout& layout);

/// Squared Mahalanobis distance (x - y)^T H^{-1} (x - y) for diagonal H:
/// sum_k (x_k - y_k)^2 / H_kk.
double mahalanobis_sq(std::span<const double> x, std::span<const double> y,
                      const BandwidthMatrix& H);

}  // namespace modeseek
