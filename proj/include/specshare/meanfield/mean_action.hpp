#pragma once

#include <Eigen/Dense>
#include <span>

#include "specshare/core/types.hpp"

namespace specshare::meanfield {

// Distribution over the global action indices: the empirical average of
// neighbor one-hot actions, or its temporally smoothed iterate. Entries are
// nonnegative and sum to 1; a device with no neighbors carries the uniform
// distribution.
using MeanAction = Eigen::Matrix<double, kGlobalActions, 1>;

MeanAction uniform_mean();

// Frequency of each action among the neighbors; empty input -> uniform.
// Throws std::invalid_argument on an action outside [0, 10).
MeanAction empirical_mean_action(std::span<const int> neighbor_actions);

// alpha * prev + (1 - alpha) * observed. Throws ConfigError unless
// alpha is in [0, 1).
MeanAction soft_update_mean(const MeanAction& prev, const MeanAction& observed,
                            double alpha);

// Expected number of requested subchannels under the distribution.
double mean_requested_bandwidth(const MeanAction& mean);

}  // namespace specshare::meanfield
