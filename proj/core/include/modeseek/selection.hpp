#pragma once

#include <cstddef>
#include <vector>

#include "modeseek/bandwidth.hpp"
#include "modeseek/layout.hpp"
#include "modeseek/meanshift.hpp"
#include "modeseek/partition.hpp"
#include "modeseek/point_set.hpp"

namespace modeseek {

/// Diagonal entries of one domain's bandwidth block.
using DiagBlock = std::vector<double>;

/// Ordered per-domain lists of predefined bandwidth blocks H_p^(b),
/// b = 0..B_p-1, ascending. Every domain needs at least three scales and the
/// blocks must be entrywise strictly increasing.
class BandwidthRange {
public:
  BandwidthRange(FeatureSpaceLayout layout,
                 std::vector<std::vector<DiagBlock>> per_domain_scales);

  /// `count` blocks per domain whose square roots are equally spaced over
  /// [sqrt_min, sqrt_max]; the same spec for every domain of the layout.
  static BandwidthRange sqrt_spaced(const FeatureSpaceLayout& layout, double sqrt_min,
                                    double sqrt_max, std::size_t count);

  /// Per-domain (sqrt_min, sqrt_max, count) specs.
  struct SqrtSpec {
    double sqrt_min;
    double sqrt_max;
    std::size_t count;
  };
  static BandwidthRange sqrt_spaced_per_domain(const FeatureSpaceLayout& layout,
                                               const std::vector<SqrtSpec>& specs);

  const FeatureSpaceLayout& layout() const { return layout_; }
  std::size_t scale_count(std::size_t domain) const;
  const DiagBlock& block(std::size_t domain, std::size_t b) const;

private:
  FeatureSpaceLayout layout_;
  std::vector<std::vector<DiagBlock>> scales_;  // [domain][b]
};

/// Entrywise arithmetic mean of a domain's predefined blocks; the stand-in
/// bandwidth for domains whose selection has not run yet.
DiagBlock temporary_bandwidth(const BandwidthRange& range, std::size_t domain);

/// Per-point selected bandwidth, assembled domain by domain.
struct BandwidthAssignment {
  FeatureSpaceLayout layout;  // the domain structure the selection used
  std::vector<std::vector<std::size_t>> scale_index;  // [domain][point]
  std::vector<std::vector<DiagBlock>> blocks;         // [domain][point]
  std::vector<BandwidthMatrix> composed;              // per point

  std::size_t size() const { return composed.size(); }
};

/// Count of mean shift partitionings executed by a selection pipeline.
struct RunCounter {
  std::size_t partition_runs = 0;
};

struct SelectionDiagnostics {
  std::vector<std::vector<double>> min_js;          // [domain][point]
  std::vector<std::size_t> non_converged_per_point; // across all runs
  std::size_t non_converged_total = 0;
};

struct SelectionResult {
  BandwidthAssignment assignment;
  RunCounter runs;
  SelectionDiagnostics diagnostics;
};

/// Iterative per-domain bandwidth selection. Domains are processed in
/// `domain_order` (a permutation of 0..P-1); for the active domain each
/// predefined scale is tried with already-selected blocks for processed
/// domains and temporary means for unprocessed ones, the data is partitioned
/// with the pseudo-balloon mean shift, and every point votes for its most
/// stable scale. Executes exactly sum_p B_p partition runs.
SelectionResult select_iterative(const PointSet& data, const BandwidthRange& range,
                                 const std::vector<std::size_t>& domain_order,
                                 const MeanShiftConfig& config);

/// Non-iterative baseline: the whole space is treated as a single domain and
/// one scale is selected per point from the given full-space matrices.
/// Executes exactly scales.size() partition runs.
SelectionResult select_joint(const PointSet& data,
                             const std::vector<BandwidthMatrix>& full_space_scales,
                             const MeanShiftConfig& config);

/// Final clustering with the selected per-point bandwidths; variant is
/// PseudoBalloon or SamplePoint.
Partition final_partition(const PointSet& data, const BandwidthAssignment& assignment,
                          MeanShiftVariant variant, const MeanShiftConfig& config);

}  // namespace modeseek
