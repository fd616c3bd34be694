#include "specshare/env/negotiation.hpp"

#include <stdexcept>

namespace specshare::env {

Observation zero_observation() { return Observation::Zero(); }

Observation one_hot(int action) {
  if (action < 0 || action >= kGlobalActions) {
    throw std::invalid_argument("one_hot: action outside the global index set");
  }
  Observation obs = Observation::Zero();
  obs[action] = 1.0;
  return obs;
}

long long total_requested(const JointAction& requests) {
  long long total = 0;
  for (const int r : requests.requests) total += r;
  return total;
}

double global_reward(const JointAction& requests, int n_channels) {
  const long long total = total_requested(requests);
  if (total > n_channels) return -1.0;
  return -(1.0 - static_cast<double>(total) / static_cast<double>(n_channels));
}

StepResult step(const JointAction& requests, int n_channels) {
  StepResult result;
  result.reward = global_reward(requests, n_channels);
  result.observations.reserve(requests.requests.size());
  for (const int r : requests.requests) result.observations.push_back(one_hot(r));
  return result;
}

std::optional<Allocation> allocate_channels(const JointAction& requests, int n_channels) {
  if (total_requested(requests) > n_channels) return std::nullopt;
  Allocation allocation;
  allocation.assignment.reserve(requests.requests.size());
  int next = 0;
  for (const int r : requests.requests) {
    allocation.assignment.push_back(ChannelRange{next, next + r});
    next += r;
  }
  return allocation;
}

Utilization utilization(const JointAction& requests, int n_channels) {
  const long long total = total_requested(requests);
  Utilization result;
  result.feasible = total <= n_channels;
  result.rate = result.feasible
                    ? static_cast<double>(total) / static_cast<double>(n_channels)
                    : 0.0;
  return result;
}

}  // namespace specshare::env
