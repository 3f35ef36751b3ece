#include "matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace modeseek::tools {

namespace {

// Hungarian algorithm with potentials on a square cost matrix (minimization).
// Returns the column assigned to each row.
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) {
    if (match[j] != 0) {
      row_to_col[match[j] - 1] = j - 1;
    }
  }
  return row_to_col;
}

}  // namespace

double label_accuracy(const std::vector<std::size_t>& predicted,
                      const std::vector<std::size_t>& truth) {
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("label_accuracy: length mismatch");
  }
  if (predicted.empty()) {
    return 1.0;
  }
  std::size_t k_pred = 0, k_true = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    k_pred = std::max(k_pred, predicted[i] + 1);
    k_true = std::max(k_true, truth[i] + 1);
  }
  const std::size_t side = std::max(k_pred, k_true);

  std::vector<std::vector<double>> cost(side, std::vector<double>(side, 0.0));
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    cost[predicted[i]][truth[i]] -= 1.0;  // negated overlap: minimize
  }

  const auto assignment = hungarian(cost);
  double matched = 0.0;
  for (std::size_t r = 0; r < side; ++r) {
    matched -= cost[r][assignment[r]];
  }
  return matched / static_cast<double>(predicted.size());
}

}  // namespace modeseek::tools
