#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "modeseek/bandwidth.hpp"
#include "modeseek/point_set.hpp"

namespace modeseek {

enum class KernelKind { Gaussian, Epanechnikov };

/// Scalar kernel profile k with K(x) = c_k * k(||x||^2).
///
/// Gaussian:      k(t) = exp(-t/2),      c_k = (2*pi)^{-d/2},
///                g(t) = -k'(t) = k(t)/2.
/// Epanechnikov:  k(t) = 1 - t on [0,1], 0 beyond; c_k from the unit-ball
///                profile volume, (d+2) * Gamma(d/2 + 1) / (2 * pi^{d/2}).
class KernelProfile {
public:
  explicit KernelProfile(KernelKind kind) : kind_(kind) {}

  KernelKind kind() const { return kind_; }

  /// k(t) for t >= 0 (unchecked; see profile_eval for the validating entry).
  double operator()(double t) const;

  /// g(t) = -k'(t), the weight profile of the gradient.
  double grad_weight(double t) const;

  /// Normalization constant c_k making K integrate to one in d dimensions.
  double normalization(std::size_t dim) const;

private:
  KernelKind kind_;
};

/// k(t); throws std::domain_error for t < 0.
double profile_eval(const KernelProfile& profile, double t);

/// Fixed-bandwidth kernel density estimate at x:
///   c_k / (n |H|^{1/2}) * sum_i k(D^2(x, x_i, H)).
double kde_fixed(const PointSet& data, const BandwidthMatrix& H,
                 std::span<const double> x, const KernelProfile& profile);

/// Sample point estimate: each data point carries its own bandwidth,
///   (1/n) * sum_i c_k / |H_i|^{1/2} * k(D^2(x, x_i, H_i)).
double kde_sample_point(const PointSet& data,
                        std::span<const BandwidthMatrix> bandwidths,
                        std::span<const double> x, const KernelProfile& profile);

/// Balloon estimate: the bandwidth is attached to the estimation point, so
/// the value coincides with kde_fixed(data, H_at_x, x).
double kde_balloon(const PointSet& data, const BandwidthMatrix& H_at_x,
                   std::span<const double> x, const KernelProfile& profile);

/// Mean over eval_points of (estimate(x) - true_density(x))^2; a grid
/// surrogate of the pointwise mean squared error.
double empirical_mse(
    const std::function<double(std::span<const double>)>& estimate,
    const std::function<double(std::span<const double>)>& true_density,
    const std::vector<std::vector<double>>& eval_points);

}  // namespace modeseek
