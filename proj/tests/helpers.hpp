#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "modeseek/modeseek.hpp"

namespace testutil {

// ---------------------------------------------------------------------------
// Seeded synthetic data
// ---------------------------------------------------------------------------

struct MixtureComponent {
  std::vector<double> mean;
  std::vector<double> sigma;  // per-axis standard deviation
  std::size_t count = 0;
};

// Box-Muller draw; avoids distribution classes so the stream is identical on
// every platform.
inline double standard_normal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(std::numeric_limits<double>::min(), 1.0);
  const double u1 = unit(rng);
  const double u2 = unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline std::vector<std::vector<double>> mixture_rows(std::uint64_t seed,
                                                     const std::vector<MixtureComponent>& comps) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> rows;
  for (const auto& c : comps) {
    for (std::size_t i = 0; i < c.count; ++i) {
      std::vector<double> p(c.mean.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = c.mean[k] + c.sigma[k] * standard_normal(rng);
      }
      rows.push_back(std::move(p));
    }
  }
  return rows;
}

inline modeseek::PointSet mixture_points(std::uint64_t seed,
                                         const std::vector<MixtureComponent>& comps,
                                         modeseek::FeatureSpaceLayout layout) {
  return modeseek::PointSet::from_rows(mixture_rows(seed, comps), std::move(layout));
}

// Ground-truth labels in generation order (component index per point).
inline std::vector<std::size_t> mixture_truth(const std::vector<MixtureComponent>& comps) {
  std::vector<std::size_t> truth;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    truth.insert(truth.end(), comps[c].count, c);
  }
  return truth;
}

// ---------------------------------------------------------------------------
// Naive estimator oracles: straight transcriptions of the density formulas,
// independent of the library's storage and evaluation path.
// ---------------------------------------------------------------------------

inline double oracle_profile(modeseek::KernelKind kind, double t) {
  if (kind == modeseek::KernelKind::Gaussian) {
    return std::exp(-0.5 * t);
  }
  return t <= 1.0 ? 1.0 - t : 0.0;
}

inline double oracle_normalization(modeseek::KernelKind kind, std::size_t d) {
  if (kind == modeseek::KernelKind::Gaussian) {
    return std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(d));
  }
  const double dd = static_cast<double>(d);
  return (dd + 2.0) * std::tgamma(0.5 * dd + 1.0) / (2.0 * std::pow(std::numbers::pi, 0.5 * dd));
}

inline double oracle_kde_fixed(const std::vector<std::vector<double>>& data,
                               const std::vector<double>& h_diag,
                               const std::vector<double>& x, modeseek::KernelKind kind) {
  const std::size_t d = x.size();
  double det_sqrt = 1.0;
  for (double h : h_diag) {
    det_sqrt *= std::sqrt(h);
  }
  double sum = 0.0;
  for (const auto& xi : data) {
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      t += (x[k] - xi[k]) * (x[k] - xi[k]) / h_diag[k];
    }
    sum += oracle_profile(kind, t);
  }
  return oracle_normalization(kind, d) * sum / (static_cast<double>(data.size()) * det_sqrt);
}

inline double oracle_kde_sample_point(const std::vector<std::vector<double>>& data,
                                      const std::vector<std::vector<double>>& h_diags,
                                      const std::vector<double>& x,
                                      modeseek::KernelKind kind) {
  const std::size_t d = x.size();
  const double ck = oracle_normalization(kind, d);
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double det_sqrt = 1.0;
    for (double h : h_diags[i]) {
      det_sqrt *= std::sqrt(h);
    }
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      t += (x[k] - data[i][k]) * (x[k] - data[i][k]) / h_diags[i][k];
    }
    sum += ck / det_sqrt * oracle_profile(kind, t);
  }
  return sum / static_cast<double>(data.size());
}

inline double oracle_kde_balloon(const std::vector<std::vector<double>>& data,
                                 const std::vector<double>& h_at_x,
                                 const std::vector<double>& x, modeseek::KernelKind kind) {
  return oracle_kde_fixed(data, h_at_x, x, kind);
}

// ---------------------------------------------------------------------------
// Partition structure helpers
// ---------------------------------------------------------------------------

inline std::set<std::set<std::size_t>> partition_signature(
    const std::vector<std::size_t>& labels) {
  std::size_t count = 0;
  for (std::size_t l : labels) {
    count = std::max(count, l + 1);
  }
  std::vector<std::set<std::size_t>> groups(count);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    groups[labels[i]].insert(i);
  }
  return {groups.begin(), groups.end()};
}

inline std::vector<std::vector<double>> rows_of(const modeseek::PointSet& set) {
  std::vector<std::vector<double>> rows;
  rows.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    rows.push_back(set.point(i));
  }
  return rows;
}

}  // namespace testutil
