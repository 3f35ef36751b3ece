#include "modeseek/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace modeseek {

PointSet::PointSet(std::size_t n, FeatureSpaceLayout layout)
    : n_(n), layout_(std::move(layout)), cols_(n * layout_.total_dim(), 0.0) {
  if (n_ == 0) {
    throw std::invalid_argument("PointSet: needs at least one point");
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows,
                             FeatureSpaceLayout layout) {
  PointSet set(rows.size(), std::move(layout));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    set.set_point(i, rows[i]);
  }
  return set;
}

std::vector<double> PointSet::point(std::size_t i) const {
  const std::size_t d = dim();
  std::vector<double> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    out[k] = cols_[k * n_ + i];
  }
  return out;
}

void PointSet::set_point(std::size_t i, std::span<const double> values) {
  if (i >= n_) {
    throw std::invalid_argument("PointSet: point index out of range");
  }
  if (values.size() != dim()) {
    throw std::invalid_argument("PointSet: point length does not match layout dimension");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("PointSet: coordinates must be finite");
    }
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    cols_[k * n_ + i] = values[k];
  }
}

}  // namespace modeseek
