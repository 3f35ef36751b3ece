#include "modeseek/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "modeseek/stability.hpp"

namespace modeseek {

BandwidthRange::BandwidthRange(FeatureSpaceLayout layout,
                               std::vector<std::vector<DiagBlock>> per_domain_scales)
    : layout_(std::move(layout)), scales_(std::move(per_domain_scales)) {
  if (scales_.size() != layout_.domain_count()) {
    throw std::invalid_argument("BandwidthRange: one scale list per domain required");
  }
  for (std::size_t p = 0; p < scales_.size(); ++p) {
    const auto& list = scales_[p];
    if (list.size() < 3) {
      throw std::invalid_argument("BandwidthRange: at least three scales per domain required");
    }
    for (std::size_t b = 0; b < list.size(); ++b) {
      if (list[b].size() != layout_.domain_dim(p)) {
        throw std::invalid_argument("BandwidthRange: block length does not match domain");
      }
      for (std::size_t k = 0; k < list[b].size(); ++k) {
        if (!(list[b][k] > 0.0) || !std::isfinite(list[b][k])) {
          throw std::domain_error("BandwidthRange: blocks must be positive and finite");
        }
        if (b > 0 && !(list[b][k] > list[b - 1][k])) {
          throw std::invalid_argument("BandwidthRange: blocks must be strictly increasing");
        }
      }
    }
  }
}

BandwidthRange BandwidthRange::sqrt_spaced(const FeatureSpaceLayout& layout,
                                           double sqrt_min, double sqrt_max,
                                           std::size_t count) {
  return sqrt_spaced_per_domain(
      layout, std::vector<SqrtSpec>(layout.domain_count(), {sqrt_min, sqrt_max, count}));
}

BandwidthRange BandwidthRange::sqrt_spaced_per_domain(const FeatureSpaceLayout& layout,
                                                      const std::vector<SqrtSpec>& specs) {
  if (specs.size() != layout.domain_count()) {
    throw std::invalid_argument("BandwidthRange: one spec per domain required");
  }
  std::vector<std::vector<DiagBlock>> scales(specs.size());
  for (std::size_t p = 0; p < specs.size(); ++p) {
    const auto& [lo, hi, count] = specs[p];
    if (count < 3) {
      throw std::invalid_argument("BandwidthRange: scale count must be at least 3");
    }
    if (!(lo > 0.0) || !(hi > lo)) {
      throw std::invalid_argument("BandwidthRange: need 0 < sqrt_min < sqrt_max");
    }
    scales[p].reserve(count);
    for (std::size_t b = 0; b < count; ++b) {
      const double s = lo + (hi - lo) * static_cast<double>(b) /
                                static_cast<double>(count - 1);
      scales[p].emplace_back(layout.domain_dim(p), s * s);
    }
  }
  return BandwidthRange(layout, std::move(scales));
}

std::size_t BandwidthRange::scale_count(std::size_t domain) const {
  if (domain >= scales_.size()) {
    throw std::invalid_argument("BandwidthRange: domain index out of range");
  }
  return scales_[domain].size();
}

const DiagBlock& BandwidthRange::block(std::size_t domain, std::size_t b) const {
  if (domain >= scales_.size() || b >= scales_[domain].size()) {
    throw std::invalid_argument("BandwidthRange: scale index out of range");
  }
  return scales_[domain][b];
}

DiagBlock temporary_bandwidth(const BandwidthRange& range, std::size_t domain) {
  const std::size_t B = range.scale_count(domain);
  DiagBlock mean(range.block(domain, 0).size(), 0.0);
  for (std::size_t b = 0; b < B; ++b) {
    const DiagBlock& blk = range.block(domain, b);
    for (std::size_t k = 0; k < mean.size(); ++k) {
      mean[k] += blk[k];
    }
  }
  for (double& v : mean) {
    v /= static_cast<double>(B);
  }
  return mean;
}

namespace {

void accumulate_non_convergence(const Partition& part, SelectionDiagnostics& diag) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part.converged[i] == 0) {
      ++diag.non_converged_per_point[i];
      ++diag.non_converged_total;
    }
  }
}

}  // namespace

SelectionResult select_iterative(const PointSet& data, const BandwidthRange& range,
                                 const std::vector<std::size_t>& domain_order,
                                 const MeanShiftConfig& config) {
  config.validate();
  const FeatureSpaceLayout& layout = range.layout();
  if (layout.total_dim() != data.dim()) {
    throw std::invalid_argument("select_iterative: range layout does not match the data");
  }
  const std::size_t P = layout.domain_count();
  const std::size_t n = data.size();

  std::vector<std::size_t> sorted = domain_order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(P);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw std::invalid_argument("select_iterative: domain_order must be a permutation of the domains");
  }

  std::vector<DiagBlock> temp(P);
  for (std::size_t p = 0; p < P; ++p) {
    temp[p] = temporary_bandwidth(range, p);
  }

  SelectionResult result;
  result.assignment.layout = layout;
  result.assignment.scale_index.assign(P, std::vector<std::size_t>(n, 0));
  result.assignment.blocks.assign(P, std::vector<DiagBlock>(n));
  result.diagnostics.min_js.assign(P, std::vector<double>(n, 0.0));
  result.diagnostics.non_converged_per_point.assign(n, 0);

  std::vector<bool> processed(P, false);

  for (const std::size_t rho : domain_order) {
    const std::size_t B = range.scale_count(rho);

    ScaleTable table;
    table.slice = CoordSlice{layout.domain_offset(rho), layout.domain_dim(rho)};
    table.partitions.reserve(B);
    table.summaries.reserve(B);

    for (std::size_t b = 0; b < B; ++b) {
      // Composed per-point bandwidth: selected blocks for processed domains,
      // the scale-b block for the active one, temporary means elsewhere.
      std::vector<BandwidthMatrix> per_point;
      per_point.reserve(n);
      std::vector<std::vector<double>> blocks(P);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t q = 0; q < P; ++q) {
          if (q == rho) {
            blocks[q] = range.block(rho, b);
          } else if (processed[q]) {
            blocks[q] = range.block(q, result.assignment.scale_index[q][i]);
          } else {
            blocks[q] = temp[q];
          }
        }
        per_point.push_back(compose_bandwidth(blocks, layout));
      }

      Partition part = partition_pseudo_balloon(data, per_point, config);
      ++result.runs.partition_runs;
      accumulate_non_convergence(part, result.diagnostics);

      table.summaries.push_back(summarize_clusters(data, part, table.slice));
      table.partitions.push_back(std::move(part));
    }

    for (std::size_t i = 0; i < n; ++i) {
      double min_js = 0.0;
      const std::size_t best = best_scale_for_point(i, table, min_js);
      result.assignment.scale_index[rho][i] = best;
      result.assignment.blocks[rho][i] = range.block(rho, best);
      result.diagnostics.min_js[rho][i] = min_js;
    }
    processed[rho] = true;
  }

  result.assignment.composed.reserve(n);
  std::vector<std::vector<double>> blocks(P);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < P; ++q) {
      blocks[q] = result.assignment.blocks[q][i];
    }
    result.assignment.composed.push_back(compose_bandwidth(blocks, layout));
  }
  return result;
}

SelectionResult select_joint(const PointSet& data,
                             const std::vector<BandwidthMatrix>& full_space_scales,
                             const MeanShiftConfig& config) {
  config.validate();
  const std::size_t B = full_space_scales.size();
  const std::size_t n = data.size();
  const std::size_t d = data.dim();
  if (B < 3) {
    throw std::invalid_argument("select_joint: at least three scales required");
  }
  for (std::size_t b = 0; b < B; ++b) {
    if (full_space_scales[b].dim() != d) {
      throw std::invalid_argument("select_joint: scale dimension mismatch");
    }
    if (b > 0) {
      for (std::size_t k = 0; k < d; ++k) {
        if (!(full_space_scales[b].entry(k) > full_space_scales[b - 1].entry(k))) {
          throw std::invalid_argument("select_joint: scales must be strictly increasing");
        }
      }
    }
  }

  SelectionResult result;
  result.assignment.layout = FeatureSpaceLayout::single(d);
  result.assignment.scale_index.assign(1, std::vector<std::size_t>(n, 0));
  result.assignment.blocks.assign(1, std::vector<DiagBlock>(n));
  result.diagnostics.min_js.assign(1, std::vector<double>(n, 0.0));
  result.diagnostics.non_converged_per_point.assign(n, 0);

  ScaleTable table;
  table.slice = CoordSlice{0, d};
  table.partitions.reserve(B);
  table.summaries.reserve(B);

  for (std::size_t b = 0; b < B; ++b) {
    std::vector<BandwidthMatrix> per_point(n, full_space_scales[b]);
    Partition part = partition_pseudo_balloon(data, per_point, config);
    ++result.runs.partition_runs;
    accumulate_non_convergence(part, result.diagnostics);
    table.summaries.push_back(summarize_clusters(data, part, table.slice));
    table.partitions.push_back(std::move(part));
  }

  result.assignment.composed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double min_js = 0.0;
    const std::size_t best = best_scale_for_point(i, table, min_js);
    result.assignment.scale_index[0][i] = best;
    result.assignment.blocks[0][i] = full_space_scales[best].diag();
    result.diagnostics.min_js[0][i] = min_js;
    result.assignment.composed.push_back(full_space_scales[best]);
  }
  return result;
}

Partition final_partition(const PointSet& data, const BandwidthAssignment& assignment,
                          MeanShiftVariant variant, const MeanShiftConfig& config) {
  if (assignment.size() != data.size()) {
    throw std::invalid_argument("final_partition: assignment does not cover the data");
  }
  switch (variant) {
    case MeanShiftVariant::PseudoBalloon:
      return partition_pseudo_balloon(data, assignment.composed, config);
    case MeanShiftVariant::SamplePoint:
      return partition_sample_point(data, assignment.composed, config);
    case MeanShiftVariant::Fixed:
      break;
  }
  throw std::invalid_argument("final_partition: variant must be PseudoBalloon or SamplePoint");
}

}  // namespace modeseek
