#include "modeseek/meanshift.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "exp_batch.hpp"
#include "modeseek/threading.hpp"

namespace modeseek {

namespace {

constexpr std::size_t kBlock = 1024;

double gaussian_norm(std::size_t d) {
  return std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(d));
}

// Deterministic four-lane dot product; the fixed split keeps the summation
// order independent of the optimizer.
double dot_block(const double* w, const double* v, std::size_t m) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    a0 += w[j] * v[j];
    a1 += w[j + 1] * v[j + 1];
    a2 += w[j + 2] * v[j + 2];
    a3 += w[j + 3] * v[j + 3];
  }
  for (; j < m; ++j) {
    a0 += w[j] * v[j];
  }
  return (a0 + a1) + (a2 + a3);
}

double sum_block(const double* w, std::size_t m) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    a0 += w[j];
    a1 += w[j + 1];
    a2 += w[j + 2];
    a3 += w[j + 3];
  }
  for (; j < m; ++j) {
    a0 += w[j];
  }
  return (a0 + a1) + (a2 + a3);
}

// Kernel-weight context for a trajectory whose bandwidth is one diagonal
// matrix (fixed and pseudo-balloon variants).
struct FixedCtx {
  const PointSet* data;
  std::vector<double> inv2h;  // 1 / (2 H_kk)
  double density_scale;       // c_k / (n |H|^{1/2})

  FixedCtx(const PointSet& set, const BandwidthMatrix& H) : data(&set) {
    const std::size_t d = set.dim();
    if (H.dim() != d) {
      throw std::invalid_argument("mean shift: bandwidth dimension mismatch");
    }
    inv2h.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      inv2h[k] = 0.5 / H.entry(k);
    }
    density_scale = gaussian_norm(d) / (static_cast<double>(set.size()) * H.sqrt_det());
  }
};

// Context for the sample point variant: one bandwidth per data point, shared
// by every trajectory of a partition run.
struct SampleCtx {
  const PointSet* data;
  std::vector<double> inv2h_cols;   // [k * n + i]
  std::vector<double> det_factor;   // |H_i|^{-1/2}
  double density_scale;             // c_k / n

  SampleCtx(const PointSet& set, std::span<const BandwidthMatrix> bandwidths)
      : data(&set) {
    const std::size_t n = set.size();
    const std::size_t d = set.dim();
    if (bandwidths.size() != n) {
      throw std::invalid_argument("mean shift: one bandwidth per data point required");
    }
    inv2h_cols.resize(n * d);
    det_factor.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const BandwidthMatrix& Hi = bandwidths[i];
      if (Hi.dim() != d) {
        throw std::invalid_argument("mean shift: bandwidth dimension mismatch");
      }
      for (std::size_t k = 0; k < d; ++k) {
        inv2h_cols[k * n + i] = 0.5 / Hi.entry(k);
      }
      det_factor[i] = 1.0 / Hi.sqrt_det();
    }
    density_scale = gaussian_norm(d) / static_cast<double>(n);
  }
};

// One weighted-mean evaluation at y. Returns the weight sum and writes the
// weighted mean of the data into mean_out (unspecified when the sum is 0).
// scratch must hold kBlock doubles.
double weighted_mean_generic(const FixedCtx& ctx, const double* y, double* mean_out,
                             double* scratch) {
  const PointSet& data = *ctx.data;
  const std::size_t n = data.size();
  const std::size_t d = data.dim();
  double wsum = 0.0;
  std::fill(mean_out, mean_out + d, 0.0);
  for (std::size_t base = 0; base < n; base += kBlock) {
    const std::size_t m = std::min(kBlock, n - base);
    std::memset(scratch, 0, m * sizeof(double));
    for (std::size_t k = 0; k < d; ++k) {
      const double* col = data.column(k).data() + base;
      const double yk = y[k];
      const double s = ctx.inv2h[k];
      for (std::size_t j = 0; j < m; ++j) {
        const double dx = yk - col[j];
        scratch[j] += dx * dx * s;
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      scratch[j] = -scratch[j];
    }
    detail::exp_batch(scratch, m);
    wsum += sum_block(scratch, m);
    for (std::size_t k = 0; k < d; ++k) {
      mean_out[k] += dot_block(scratch, data.column(k).data() + base, m);
    }
  }
  if (wsum > 0.0) {
    for (std::size_t k = 0; k < d; ++k) {
      mean_out[k] /= wsum;
    }
  }
  return wsum;
}

#if defined(MODESEEK_EXP_BATCH_VECTOR) && defined(__AVX512F__)
// Fused 8-wide pass: distances, exp and the weighted sums in one sweep over
// the columns, for up to 8 coordinates. The scalar tail uses std::exp.
double weighted_mean_fused(const FixedCtx& ctx, const double* y, double* mean_out) {
  const PointSet& data = *ctx.data;
  const std::size_t n = data.size();
  const std::size_t d = data.dim();

  const double* cols[8];
  __m512d yk[8], sk[8], acc[8];
  for (std::size_t k = 0; k < d; ++k) {
    cols[k] = data.column(k).data();
    yk[k] = _mm512_set1_pd(y[k]);
    sk[k] = _mm512_set1_pd(ctx.inv2h[k]);
    acc[k] = _mm512_setzero_pd();
  }
  __m512d acc_w = _mm512_setzero_pd();

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m512d neg_dsq = _mm512_setzero_pd();
    __m512d vals[8];
    for (std::size_t k = 0; k < d; ++k) {
      vals[k] = _mm512_loadu_pd(cols[k] + i);
      const __m512d diff = _mm512_sub_pd(yk[k], vals[k]);
      const __m512d sq = _mm512_mul_pd(diff, diff);
      neg_dsq = _mm512_fnmadd_pd(sq, sk[k], neg_dsq);
    }
    const __m512d w = _ZGVeN8v_exp(neg_dsq);
    acc_w = _mm512_add_pd(acc_w, w);
    for (std::size_t k = 0; k < d; ++k) {
      acc[k] = _mm512_fmadd_pd(w, vals[k], acc[k]);
    }
  }

  double wsum = _mm512_reduce_add_pd(acc_w);
  for (std::size_t k = 0; k < d; ++k) {
    mean_out[k] = _mm512_reduce_add_pd(acc[k]);
  }
  for (; i < n; ++i) {
    double t = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double dx = y[k] - cols[k][i];
      t += dx * dx * ctx.inv2h[k];
    }
    const double w = std::exp(-t);
    wsum += w;
    for (std::size_t k = 0; k < d; ++k) {
      mean_out[k] += w * cols[k][i];
    }
  }

  if (wsum > 0.0) {
    for (std::size_t k = 0; k < d; ++k) {
      mean_out[k] /= wsum;
    }
  }
  return wsum;
}
#endif

double weighted_mean(const FixedCtx& ctx, const double* y, double* mean_out,
                     double* scratch) {
#if defined(MODESEEK_EXP_BATCH_VECTOR) && defined(__AVX512F__)
  if (ctx.data->dim() <= 8) {
    return weighted_mean_fused(ctx, y, mean_out);
  }
#endif
  return weighted_mean_generic(ctx, y, mean_out, scratch);
}

double weighted_mean(const SampleCtx& ctx, const double* y, double* mean_out,
                     double* scratch) {
  const PointSet& data = *ctx.data;
  const std::size_t n = data.size();
  const std::size_t d = data.dim();
  double wsum = 0.0;
  std::fill(mean_out, mean_out + d, 0.0);
  for (std::size_t base = 0; base < n; base += kBlock) {
    const std::size_t m = std::min(kBlock, n - base);
    std::memset(scratch, 0, m * sizeof(double));
    for (std::size_t k = 0; k < d; ++k) {
      const double* col = data.column(k).data() + base;
      const double* s = ctx.inv2h_cols.data() + k * n + base;
      const double yk = y[k];
      for (std::size_t j = 0; j < m; ++j) {
        const double dx = yk - col[j];
        scratch[j] += dx * dx * s[j];
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      scratch[j] = -scratch[j];
    }
    detail::exp_batch(scratch, m);
    const double* detf = ctx.det_factor.data() + base;
    for (std::size_t j = 0; j < m; ++j) {
      scratch[j] *= detf[j];
    }
    wsum += sum_block(scratch, m);
    for (std::size_t k = 0; k < d; ++k) {
      mean_out[k] += dot_block(scratch, data.column(k).data() + base, m);
    }
  }
  if (wsum > 0.0) {
    for (std::size_t k = 0; k < d; ++k) {
      mean_out[k] /= wsum;
    }
  }
  return wsum;
}

struct SeekResult {
  std::vector<double> mode;
  bool converged = true;
};

// Core mode-seeking loop shared by all variants. When record is non-null the
// visited points and their densities are appended to it.
template <class Ctx>
SeekResult seek_mode(const Ctx& ctx, std::span<const double> x0,
                     const MeanShiftConfig& config, Trajectory* record) {
  const std::size_t d = ctx.data->dim();
  const double eps_sq = config.convergence_eps * config.convergence_eps;

  std::vector<double> y(x0.begin(), x0.end());
  std::vector<double> mean(d);
  std::vector<double> scratch(kBlock);

  if (record != nullptr) {
    record->steps.push_back(y);
  }

  SeekResult result;
  for (std::size_t iter = 1;; ++iter) {
    const double wsum = weighted_mean(ctx, y.data(), mean.data(), scratch.data());
    if (record != nullptr) {
      record->densities.push_back(wsum * ctx.density_scale);
    }
    if (wsum == 0.0) {
      break;  // isolated point: y is its own mode
    }
    double step_sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double s = mean[k] - y[k];
      step_sq += s * s;
    }
    if (step_sq < eps_sq) {
      break;
    }
    if (iter == config.max_iters) {
      result.converged = false;
      break;
    }
    y = mean;
    if (record != nullptr) {
      record->steps.push_back(y);
    }
  }
  result.mode = std::move(y);
  if (record != nullptr) {
    record->converged = result.converged;
  }
  return result;
}

void validate_query(const PointSet& data, std::span<const double> x) {
  if (x.size() != data.dim()) {
    throw std::invalid_argument("mean shift: query dimension mismatch");
  }
}

std::vector<double> shift_from_mean(const double* mean, std::span<const double> x) {
  std::vector<double> m(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    m[k] = mean[k] - x[k];
  }
  return m;
}

// Grouping over flat row-major mode storage.
std::vector<std::size_t> group_modes_flat(const double* modes, std::size_t count,
                                          std::size_t d,
                                          const std::vector<BandwidthMatrix>& per_mode_H) {
  if (per_mode_H.size() != count) {
    throw std::invalid_argument("group_modes: one bandwidth per mode required");
  }
  std::vector<double> radius(count * d);  // sqrt(H_kk)
  for (std::size_t i = 0; i < count; ++i) {
    if (per_mode_H[i].dim() != d) {
      throw std::invalid_argument("group_modes: bandwidth dimension mismatch");
    }
    for (std::size_t k = 0; k < d; ++k) {
      radius[i * d + k] = std::sqrt(per_mode_H[i].entry(k));
    }
  }

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (std::size_t i = 0; i < count; ++i) {
    const double* zi = modes + i * d;
    const double* ri = radius.data() + i * d;
    for (std::size_t j = i + 1; j < count; ++j) {
      const double* zj = modes + j * d;
      const double* rj = radius.data() + j * d;
      bool linked = true;
      for (std::size_t k = 0; k < d; ++k) {
        if (std::abs(zi[k] - zj[k]) > std::min(ri[k], rj[k])) {
          linked = false;
          break;
        }
      }
      if (linked) {
        const std::size_t a = find(i);
        const std::size_t b = find(j);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  }

  // Dense ids in first-seen order over mode index.
  std::vector<std::size_t> ids(count);
  std::vector<std::size_t> root_to_id(count, count);
  std::size_t next = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = find(i);
    if (root_to_id[r] == count) {
      root_to_id[r] = next++;
    }
    ids[i] = root_to_id[r];
  }
  return ids;
}

// Shared partition driver: seeks a mode from every data point (in parallel,
// one slot per point), then groups and labels sequentially.
template <class MakeCtx>
Partition run_partition(const PointSet& data, const MeanShiftConfig& config,
                        const std::vector<BandwidthMatrix>& grouping_H,
                        MakeCtx&& seek_one) {
  config.validate();
  const std::size_t n = data.size();
  const std::size_t d = data.dim();

  Partition part;
  part.dim = d;
  part.modes.resize(n * d);
  part.converged.assign(n, 1);

  parallel_for(0, n, worker_count(config.threads), [&](std::size_t i) {
    SeekResult r = seek_one(i);
    std::copy(r.mode.begin(), r.mode.end(), part.modes.begin() + i * d);
    part.converged[i] = r.converged ? 1 : 0;
  });

  part.labels = group_modes_flat(part.modes.data(), n, d, grouping_H);
  part.cluster_count = part.labels.empty()
                           ? 0
                           : 1 + *std::max_element(part.labels.begin(), part.labels.end());
  return part;
}

}  // namespace

void MeanShiftConfig::validate() const {
  if (!(convergence_eps > 0.0)) {
    throw std::domain_error("MeanShiftConfig: convergence_eps must be positive");
  }
  if (max_iters < 1) {
    throw std::domain_error("MeanShiftConfig: max_iters must be at least 1");
  }
}

std::vector<double> ms_vector_fixed(std::span<const double> x, const PointSet& data,
                                    const BandwidthMatrix& H) {
  validate_query(data, x);
  FixedCtx ctx(data, H);
  std::vector<double> mean(data.dim());
  std::vector<double> scratch(kBlock);
  if (weighted_mean(ctx, x.data(), mean.data(), scratch.data()) == 0.0) {
    throw IsolatedPointError();
  }
  return shift_from_mean(mean.data(), x);
}

std::vector<double> ms_vector_sample_point(std::span<const double> x, const PointSet& data,
                                           std::span<const BandwidthMatrix> bandwidths) {
  validate_query(data, x);
  SampleCtx ctx(data, bandwidths);
  std::vector<double> mean(data.dim());
  std::vector<double> scratch(kBlock);
  if (weighted_mean(ctx, x.data(), mean.data(), scratch.data()) == 0.0) {
    throw IsolatedPointError();
  }
  return shift_from_mean(mean.data(), x);
}

std::vector<double> ms_vector_balloon(std::span<const double> x, const PointSet& data,
                                      const BandwidthMatrix& H_fixed_for_trajectory) {
  // The bandwidth is pinned to the trajectory's starting point, so the vector
  // coincides with the fixed-bandwidth one.
  return ms_vector_fixed(x, data, H_fixed_for_trajectory);
}

BandwidthSource BandwidthSource::fixed(BandwidthMatrix H) {
  return BandwidthSource(MeanShiftVariant::Fixed, {std::move(H)});
}

BandwidthSource BandwidthSource::sample_point(std::vector<BandwidthMatrix> per_data_point) {
  if (per_data_point.empty()) {
    throw std::invalid_argument("BandwidthSource: empty bandwidth list");
  }
  return BandwidthSource(MeanShiftVariant::SamplePoint, std::move(per_data_point));
}

BandwidthSource BandwidthSource::pseudo_balloon(BandwidthMatrix H_at_start) {
  return BandwidthSource(MeanShiftVariant::PseudoBalloon, {std::move(H_at_start)});
}

Trajectory filter_point(std::span<const double> x0, const PointSet& data,
                        const BandwidthSource& source, const MeanShiftConfig& config) {
  config.validate();
  validate_query(data, x0);
  if (source.variant() != config.variant) {
    throw std::invalid_argument("filter_point: bandwidth source does not match the configured variant");
  }
  Trajectory traj;
  if (config.variant == MeanShiftVariant::SamplePoint) {
    SampleCtx ctx(data, source.per_point());
    seek_mode(ctx, x0, config, &traj);
  } else {
    FixedCtx ctx(data, source.single());
    seek_mode(ctx, x0, config, &traj);
  }
  return traj;
}

std::vector<std::size_t> group_modes(const std::vector<std::vector<double>>& modes,
                                     const std::vector<BandwidthMatrix>& per_mode_H) {
  if (modes.empty()) {
    return {};
  }
  const std::size_t d = modes.front().size();
  std::vector<double> flat(modes.size() * d);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].size() != d) {
      throw std::invalid_argument("group_modes: inconsistent mode dimensions");
    }
    std::copy(modes[i].begin(), modes[i].end(), flat.begin() + i * d);
  }
  return group_modes_flat(flat.data(), modes.size(), d, per_mode_H);
}

Partition partition_fixed(const PointSet& data, const BandwidthMatrix& H,
                          const MeanShiftConfig& config) {
  FixedCtx ctx(data, H);
  std::vector<BandwidthMatrix> grouping_H(data.size(), H);
  return run_partition(data, config, grouping_H, [&](std::size_t i) {
    const std::vector<double> x0 = data.point(i);
    return seek_mode(ctx, x0, config, nullptr);
  });
}

Partition partition_pseudo_balloon(const PointSet& data,
                                   const std::vector<BandwidthMatrix>& per_point_H,
                                   const MeanShiftConfig& config) {
  if (per_point_H.size() != data.size()) {
    throw std::invalid_argument("partition_pseudo_balloon: one bandwidth per point required");
  }
  return run_partition(data, config, per_point_H, [&](std::size_t i) {
    FixedCtx ctx(data, per_point_H[i]);  // starting point's bandwidth, held constant
    const std::vector<double> x0 = data.point(i);
    return seek_mode(ctx, x0, config, nullptr);
  });
}

Partition partition_sample_point(const PointSet& data,
                                 const std::vector<BandwidthMatrix>& per_point_H,
                                 const MeanShiftConfig& config) {
  if (per_point_H.size() != data.size()) {
    throw std::invalid_argument("partition_sample_point: one bandwidth per point required");
  }
  SampleCtx ctx(data, per_point_H);
  return run_partition(data, config, per_point_H, [&](std::size_t i) {
    const std::vector<double> x0 = data.point(i);
    return seek_mode(ctx, x0, config, nullptr);
  });
}

}  // namespace modeseek
