#include "modeseek/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modeseek {

double KernelProfile::operator()(double t) const {
  switch (kind_) {
    case KernelKind::Gaussian:
      return std::exp(-0.5 * t);
    case KernelKind::Epanechnikov:
      return (t <= 1.0) ? 1.0 - t : 0.0;
  }
  return 0.0;
}

double KernelProfile::grad_weight(double t) const {
  switch (kind_) {
    case KernelKind::Gaussian:
      return 0.5 * std::exp(-0.5 * t);
    case KernelKind::Epanechnikov:
      return (t <= 1.0) ? 1.0 : 0.0;
  }
  return 0.0;
}

double KernelProfile::normalization(std::size_t dim) const {
  const double d = static_cast<double>(dim);
  switch (kind_) {
    case KernelKind::Gaussian:
      return std::pow(2.0 * std::numbers::pi, -0.5 * d);
    case KernelKind::Epanechnikov:
      // 1 / integral of (1 - ||x||^2) over the unit ball.
      return (d + 2.0) * std::tgamma(0.5 * d + 1.0) /
             (2.0 * std::pow(std::numbers::pi, 0.5 * d));
  }
  return 0.0;
}

double profile_eval(const KernelProfile& profile, double t) {
  if (t < 0.0) {
    throw std::domain_error("profile_eval: argument must be nonnegative");
  }
  return profile(t);
}

double kde_fixed(const PointSet& data, const BandwidthMatrix& H,
                 std::span<const double> x, const KernelProfile& profile) {
  const std::size_t n = data.size();
  const std::size_t d = data.dim();
  if (x.size() != d || H.dim() != d) {
    throw std::invalid_argument("kde_fixed: dimension mismatch");
  }
  double sum = 0.0;
  std::vector<double> xi(d);
  for (std::size_t i = 0; i < n; ++i) {
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double dx = x[k] - data.coord(i, k);
      t += dx * dx / H.entry(k);
    }
    sum += profile(t);
  }
  return profile.normalization(d) * sum / (static_cast<double>(n) * H.sqrt_det());
}

double kde_sample_point(const PointSet& data,
                        std::span<const BandwidthMatrix> bandwidths,
                        std::span<const double> x, const KernelProfile& profile) {
  const std::size_t n = data.size();
  const std::size_t d = data.dim();
  if (bandwidths.size() != n) {
    throw std::invalid_argument("kde_sample_point: one bandwidth per data point required");
  }
  if (x.size() != d) {
    throw std::invalid_argument("kde_sample_point: dimension mismatch");
  }
  const double ck = profile.normalization(d);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const BandwidthMatrix& Hi = bandwidths[i];
    if (Hi.dim() != d) {
      throw std::invalid_argument("kde_sample_point: bandwidth dimension mismatch");
    }
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double dx = x[k] - data.coord(i, k);
      t += dx * dx / Hi.entry(k);
    }
    sum += ck / Hi.sqrt_det() * profile(t);
  }
  return sum / static_cast<double>(n);
}

double kde_balloon(const PointSet& data, const BandwidthMatrix& H_at_x,
                   std::span<const double> x, const KernelProfile& profile) {
  // Same formula with the bandwidth attached to the estimation point.
  return kde_fixed(data, H_at_x, x, profile);
}

double empirical_mse(
    const std::function<double(std::span<const double>)>& estimate,
    const std::function<double(std::span<const double>)>& true_density,
    const std::vector<std::vector<double>>& eval_points) {
  if (eval_points.empty()) {
    throw std::invalid_argument("empirical_mse: eval_points must be nonempty");
  }
  double acc = 0.0;
  for (const auto& x : eval_points) {
    const double e = estimate(x) - true_density(x);
    acc += e * e;
  }
  return acc / static_cast<double>(eval_points.size());
}

}  // namespace modeseek
