#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "specshare/core/types.hpp"

namespace specshare::env {

// One-hot of the device's own previous request; all-zero before the first.
using Observation = Eigen::Matrix<double, kGlobalActions, 1>;

struct JointAction {
  std::vector<int> requests;  // one entry per device, in subchannels
};

struct ChannelRange {
  int begin = 0;
  int end = 0;  // [begin, end)
  int size() const { return end - begin; }
};

struct Allocation {
  std::vector<ChannelRange> assignment;  // per device, ascending id order
};

struct StepResult {
  double reward = 0.0;  // identical for every device
  std::vector<Observation> observations;
};

struct Utilization {
  double rate = 0.0;
  bool feasible = false;
};

Observation zero_observation();
Observation one_hot(int action);  // throws std::invalid_argument outside [0, 10)

long long total_requested(const JointAction& requests);

// -(1 - S/C) when the joint request fits, -1 otherwise; always in [-1, 0].
double global_reward(const JointAction& requests, int n_channels);

StepResult step(const JointAction& requests, int n_channels);

// Consecutive disjoint ranges from subchannel 0 in ascending device order;
// nullopt when the joint request exceeds capacity (never a partial layout).
std::optional<Allocation> allocate_channels(const JointAction& requests, int n_channels);

Utilization utilization(const JointAction& requests, int n_channels);

}  // namespace specshare::env
