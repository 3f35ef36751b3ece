#pragma once

#include <cstddef>
#include <vector>

namespace modeseek::tools {

/// Fraction of points whose predicted label agrees with the ground truth
/// under the best one-to-one matching of label ids (Hungarian assignment on
/// the contingency table). Both vectors must have the same length and use
/// dense 0-based ids.
double label_accuracy(const std::vector<std::size_t>& predicted,
                      const std::vector<std::size_t>& truth);

}  // namespace modeseek::tools
