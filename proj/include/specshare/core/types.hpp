#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace specshare {

// Global action index set {0,...,9}: a request for 0..9 subchannels. Every
// Q-head and mean-action distribution lives on this set; per-device limits
// are applied by masking, never by changing dimensionality.
inline constexpr int kGlobalActions = 10;

// Scalar used by the network stack. Distributions, rewards and metrics stay
// in double; float keeps the per-agent training loops fast on one core.
using Real = float;

using DeviceId = std::int32_t;

// Per-device admissible request range [lo, hi], in subchannel counts.
struct ActionSpace {
  int lo = 0;
  int hi = kGlobalActions - 1;

  int size() const { return hi - lo + 1; }
  bool contains(int action) const { return action >= lo && action <= hi; }
};

class NeighborGraph {
 public:
  NeighborGraph() = default;
  explicit NeighborGraph(std::vector<std::vector<DeviceId>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  int size() const { return static_cast<int>(adjacency_.size()); }
  std::span<const DeviceId> neighbors(DeviceId device) const {
    return adjacency_[static_cast<std::size_t>(device)];
  }

 private:
  std::vector<std::vector<DeviceId>> adjacency_;
};

}  // namespace specshare
