#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "modeseek/bandwidth.hpp"
#include "modeseek/partition.hpp"
#include "modeseek/point_set.hpp"
#include "modeseek/trajectory.hpp"

namespace modeseek {

enum class MeanShiftVariant { Fixed, SamplePoint, PseudoBalloon };

struct MeanShiftConfig {
  double convergence_eps = 1e-6;  // Euclidean step-length stopping threshold
  std::size_t max_iters = 500;
  MeanShiftVariant variant = MeanShiftVariant::Fixed;
  std::size_t threads = 0;  // 0 = auto; always capped by MODESEEK_THREADS

  void validate() const;
};

/// Every kernel weight underflowed to zero: the query point is too far from
/// all data at the given bandwidth. Callers treat such a point as its own
/// mode.
struct IsolatedPointError : std::runtime_error {
  IsolatedPointError() : std::runtime_error("mean shift: all kernel weights underflowed to zero") {}
};

/// Mean shift vector at x for the fixed-bandwidth estimator with Gaussian
/// kernel: weighted mean of the data (weights exp(-D^2/2)) minus x.
std::vector<double> ms_vector_fixed(std::span<const double> x, const PointSet& data,
                                    const BandwidthMatrix& H);

/// Sample point mean shift vector: weights |H_i|^{-1/2} exp(-D^2(x,x_i,H_i)/2).
std::vector<double> ms_vector_sample_point(std::span<const double> x, const PointSet& data,
                                           std::span<const BandwidthMatrix> bandwidths);

/// Pseudo-balloon mean shift vector. H is the bandwidth of the trajectory's
/// starting point, held constant along the whole trajectory; the value is
/// identical to ms_vector_fixed(x, data, H).
std::vector<double> ms_vector_balloon(std::span<const double> x, const PointSet& data,
                                      const BandwidthMatrix& H_fixed_for_trajectory);

/// Bandwidth supplier for filter_point; the kind must match the config's
/// variant. Fixed and PseudoBalloon carry one matrix (for PseudoBalloon, the
/// starting point's); SamplePoint carries one matrix per data point.
class BandwidthSource {
public:
  static BandwidthSource fixed(BandwidthMatrix H);
  static BandwidthSource sample_point(std::vector<BandwidthMatrix> per_data_point);
  static BandwidthSource pseudo_balloon(BandwidthMatrix H_at_start);

  MeanShiftVariant variant() const { return variant_; }
  const BandwidthMatrix& single() const { return matrices_.front(); }
  std::span<const BandwidthMatrix> per_point() const { return matrices_; }

private:
  BandwidthSource(MeanShiftVariant v, std::vector<BandwidthMatrix> m)
      : variant_(v), matrices_(std::move(m)) {}

  MeanShiftVariant variant_;
  std::vector<BandwidthMatrix> matrices_;
};

/// Iterates y <- y + m(y) from x0 until the step length drops below
/// config.convergence_eps or max_iters is reached (flagged as non-converged).
/// Records every visited point and the matching density estimate.
Trajectory filter_point(std::span<const double> x0, const PointSet& data,
                        const BandwidthSource& source, const MeanShiftConfig& config);

/// Connected components of the per-axis proximity relation: modes i and j are
/// linked iff |z_i[k] - z_j[k]| <= sqrt(min(H_i[k], H_j[k])) for every
/// coordinate k. Returns dense group ids in first-seen order.
std::vector<std::size_t> group_modes(const std::vector<std::vector<double>>& modes,
                                     const std::vector<BandwidthMatrix>& per_mode_H);

/// Mean shift partitioning with one global bandwidth: filters every data
/// point, groups the modes, and labels points by their mode's group.
Partition partition_fixed(const PointSet& data, const BandwidthMatrix& H,
                          const MeanShiftConfig& config);

/// Pseudo-balloon partitioning: each point's trajectory runs with that
/// point's own constant bandwidth; grouping uses the per-start bandwidths.
Partition partition_pseudo_balloon(const PointSet& data,
                                   const std::vector<BandwidthMatrix>& per_point_H,
                                   const MeanShiftConfig& config);

/// Sample point (variable bandwidth) partitioning: trajectories step with the
/// sample point mean shift vector; grouping as in partition_pseudo_balloon.
Partition partition_sample_point(const PointSet& data,
                                 const std::vector<BandwidthMatrix>& per_point_H,
                                 const MeanShiftConfig& config);

}  // namespace modeseek
