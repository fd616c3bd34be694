#include "specshare/meanfield/mean_action.hpp"

#include <stdexcept>

#include "specshare/core/errors.hpp"

namespace specshare::meanfield {

MeanAction uniform_mean() {
  return MeanAction::Constant(1.0 / static_cast<double>(kGlobalActions));
}

MeanAction empirical_mean_action(std::span<const int> neighbor_actions) {
  if (neighbor_actions.empty()) return uniform_mean();
  MeanAction counts = MeanAction::Zero();
  for (const int action : neighbor_actions) {
    if (action < 0 || action >= kGlobalActions) {
      throw std::invalid_argument("empirical_mean_action: action outside the global index set");
    }
    counts[action] += 1.0;
  }
  return counts / static_cast<double>(neighbor_actions.size());
}

MeanAction soft_update_mean(const MeanAction& prev, const MeanAction& observed, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ConfigError("soft_update_mean: alpha must be in [0, 1)");
  }
  return alpha * prev + (1.0 - alpha) * observed;
}

double mean_requested_bandwidth(const MeanAction& mean) {
  double expectation = 0.0;
  for (int i = 0; i < kGlobalActions; ++i) expectation += static_cast<double>(i) * mean[i];
  return expectation;
}

}  // namespace specshare::meanfield
