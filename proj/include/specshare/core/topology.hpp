#pragma once

#include <cstdint>
#include <vector>

#include "specshare/core/config.hpp"
#include "specshare/core/types.hpp"

namespace specshare {

// Cyclic k-nearest ring: ceil(k/2) indices upward, floor(k/2) downward.
// Deterministic given (n_devices, k); the seed is reserved for randomized
// topologies and ignored by the ring.
NeighborGraph build_neighbor_graph(int n_devices, int n_neighbors, std::uint64_t seed);

// Full: every device may request 0..9 subchannels. Heterogeneous: per-device
// lo drawn from {0,1,2} and hi from {lo+3,...,9}.
std::vector<ActionSpace> sample_action_spaces(int n_devices, ActionMode mode,
                                              std::uint64_t seed);

}  // namespace specshare
