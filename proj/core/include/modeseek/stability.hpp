#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "modeseek/layout.hpp"
#include "modeseek/partition.hpp"
#include "modeseek/point_set.hpp"

namespace modeseek {

/// Per-cluster normal law restricted to a coordinate slice: empirical mean,
/// regularized population covariance, and member count.
struct GaussianSummary {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  std::size_t member_count = 0;
};

/// Empirical mean and population covariance (divisor |C|) of the sliced
/// coordinates of each cluster's members, in cluster-id order. Covariances
/// are regularized by lambda * I with lambda = max(1e-9, 1e-6 * mean
/// diagonal), which keeps singleton and constant clusters positive definite.
std::vector<GaussianSummary> summarize_clusters(const PointSet& data,
                                                const Partition& partition,
                                                CoordSlice slice);

/// Convenience overload: slice = domain `domain_index` of the data's layout.
std::vector<GaussianSummary> summarize_clusters(const PointSet& data,
                                                const Partition& partition,
                                                std::size_t domain_index);

/// Jensen-Shannon divergence of r >= 2 normal laws:
///   1/2 log |mean of covs| / (prod |cov_j|)^{1/r}
///   + 1/2 sum_j (mu_j - mu_bar)^T (sum of covs)^{-1} (mu_j - mu_bar).
/// The quadratic form normalizes by the *sum* of the covariances, as the
/// formula is printed in its source.
double js_divergence(std::span<const GaussianSummary> summaries);

/// Cluster summaries of the same data at B >= 3 bandwidth scales, restricted
/// to one coordinate slice. summaries[b][u] describes cluster u of
/// partitions[b].
struct ScaleTable {
  std::vector<Partition> partitions;
  std::vector<std::vector<GaussianSummary>> summaries;
  CoordSlice slice;

  std::size_t scale_count() const { return partitions.size(); }
  void validate() const;
};

/// The interior scale index b* (0-based, in [1, B-2]) minimizing the
/// three-neighbor JS divergence of the clusters containing point i at scales
/// b*-1, b*, b*+1. Ties break toward the smallest scale.
std::size_t best_scale_for_point(std::size_t point_index, const ScaleTable& table);

/// Same, but also reports the minimal JS value.
std::size_t best_scale_for_point(std::size_t point_index, const ScaleTable& table,
                                 double& min_js);

}  // namespace modeseek
