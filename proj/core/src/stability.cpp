#include "modeseek/stability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace modeseek {

namespace {

double log_det_llt(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(std::string(what) + ": covariance not positive definite");
  }
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

std::vector<GaussianSummary> summarize_clusters(const PointSet& data,
                                                const Partition& partition,
                                                CoordSlice slice) {
  const std::size_t n = data.size();
  if (partition.size() != n) {
    throw std::invalid_argument("summarize_clusters: partition does not cover the data");
  }
  if (slice.count == 0 || slice.offset + slice.count > data.dim()) {
    throw std::invalid_argument("summarize_clusters: slice out of range");
  }
  const auto dd = static_cast<Eigen::Index>(slice.count);
  const std::size_t u_count = partition.cluster_count;

  std::vector<GaussianSummary> out(u_count);
  for (auto& s : out) {
    s.mean = Eigen::VectorXd::Zero(dd);
    s.cov = Eigen::MatrixXd::Zero(dd, dd);
  }

  for (std::size_t i = 0; i < n; ++i) {
    GaussianSummary& s = out[partition.labels[i]];
    ++s.member_count;
    for (Eigen::Index k = 0; k < dd; ++k) {
      s.mean(k) += data.coord(i, slice.offset + k);
    }
  }
  for (auto& s : out) {
    s.mean /= static_cast<double>(s.member_count);
  }

  Eigen::VectorXd delta(dd);
  for (std::size_t i = 0; i < n; ++i) {
    GaussianSummary& s = out[partition.labels[i]];
    for (Eigen::Index k = 0; k < dd; ++k) {
      delta(k) = data.coord(i, slice.offset + k) - s.mean(k);
    }
    s.cov.noalias() += delta * delta.transpose();
  }

  for (auto& s : out) {
    s.cov /= static_cast<double>(s.member_count);
    const double lambda = std::max(1e-9, 1e-6 * s.cov.diagonal().mean());
    s.cov.diagonal().array() += lambda;
  }
  return out;
}

std::vector<GaussianSummary> summarize_clusters(const PointSet& data,
                                                const Partition& partition,
                                                std::size_t domain_index) {
  const FeatureSpaceLayout& layout = data.layout();
  return summarize_clusters(
      data, partition,
      CoordSlice{layout.domain_offset(domain_index), layout.domain_dim(domain_index)});
}

double js_divergence(std::span<const GaussianSummary> summaries) {
  const std::size_t r = summaries.size();
  if (r < 2) {
    throw std::invalid_argument("js_divergence: needs at least two distributions");
  }
  const Eigen::Index d = summaries.front().mean.size();
  for (const auto& s : summaries) {
    if (s.mean.size() != d || s.cov.rows() != d || s.cov.cols() != d) {
      throw std::invalid_argument("js_divergence: dimension mismatch");
    }
  }

  Eigen::MatrixXd cov_sum = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd mu_bar = Eigen::VectorXd::Zero(d);
  double log_det_acc = 0.0;
  for (const auto& s : summaries) {
    cov_sum += s.cov;
    mu_bar += s.mean;
    log_det_acc += log_det_llt(s.cov, "js_divergence");
  }
  mu_bar /= static_cast<double>(r);

  const Eigen::MatrixXd cov_mean = cov_sum / static_cast<double>(r);
  const double log_term =
      0.5 * (log_det_llt(cov_mean, "js_divergence") - log_det_acc / static_cast<double>(r));

  Eigen::LLT<Eigen::MatrixXd> sum_llt(cov_sum);
  if (sum_llt.info() != Eigen::Success) {
    throw std::runtime_error("js_divergence: singular covariance sum");
  }
  double quad = 0.0;
  for (const auto& s : summaries) {
    const Eigen::VectorXd dev = s.mean - mu_bar;
    quad += dev.dot(sum_llt.solve(dev));
  }
  return log_term + 0.5 * quad;
}

void ScaleTable::validate() const {
  if (partitions.size() < 3) {
    throw std::invalid_argument("ScaleTable: needs at least three scales");
  }
  if (summaries.size() != partitions.size()) {
    throw std::invalid_argument("ScaleTable: one summary list per scale required");
  }
  for (std::size_t b = 0; b < partitions.size(); ++b) {
    if (summaries[b].size() != partitions[b].cluster_count) {
      throw std::invalid_argument("ScaleTable: summaries do not match cluster count");
    }
  }
}

std::size_t best_scale_for_point(std::size_t point_index, const ScaleTable& table,
                                 double& min_js) {
  table.validate();
  const std::size_t scales = table.scale_count();
  std::size_t best = 1;
  min_js = std::numeric_limits<double>::infinity();
  GaussianSummary triple[3];
  for (std::size_t b = 1; b + 1 < scales; ++b) {
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t scale = b - 1 + t;
      const std::size_t u = table.partitions[scale].labels[point_index];
      triple[t] = table.summaries[scale][u];
    }
    const double js = js_divergence(std::span<const GaussianSummary>(triple, 3));
    if (js < min_js) {
      min_js = js;
      best = b;
    }
  }
  return best;
}

std::size_t best_scale_for_point(std::size_t point_index, const ScaleTable& table) {
  double ignored = 0.0;
  return best_scale_for_point(point_index, table, ignored);
}

}  // namespace modeseek
