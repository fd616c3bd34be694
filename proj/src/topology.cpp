#include "specshare/core/topology.hpp"

#include <string>

#include "specshare/core/errors.hpp"
#include "specshare/core/rng.hpp"

namespace specshare {

NeighborGraph build_neighbor_graph(int n_devices, int n_neighbors, std::uint64_t /*seed*/) {
  if (n_devices < 1) throw ConfigError("build_neighbor_graph: need at least one device");
  if (n_neighbors < 0 || n_neighbors >= n_devices) {
    throw ConfigError("build_neighbor_graph: n_neighbors must be in [0, n_devices-1], got " +
                      std::to_string(n_neighbors) + " for " + std::to_string(n_devices) +
                      " devices");
  }
  const int up = (n_neighbors + 1) / 2;
  const int down = n_neighbors / 2;
  std::vector<std::vector<DeviceId>> adjacency(static_cast<std::size_t>(n_devices));
  for (int j = 0; j < n_devices; ++j) {
    auto& row = adjacency[static_cast<std::size_t>(j)];
    row.reserve(static_cast<std::size_t>(n_neighbors));
    for (int i = 1; i <= up; ++i) row.push_back((j + i) % n_devices);
    for (int i = 1; i <= down; ++i) row.push_back((j - i + n_devices) % n_devices);
  }
  return NeighborGraph(std::move(adjacency));
}

std::vector<ActionSpace> sample_action_spaces(int n_devices, ActionMode mode,
                                              std::uint64_t seed) {
  if (n_devices < 1) throw ConfigError("sample_action_spaces: need at least one device");
  std::vector<ActionSpace> spaces(static_cast<std::size_t>(n_devices));
  if (mode == ActionMode::Full) return spaces;
  Rng rng(derive_seed(seed, rng_stream::kActionSpaces));
  for (auto& space : spaces) {
    space.lo = rng.uniform_int(3);
    const int min_hi = space.lo + 3;
    space.hi = min_hi + rng.uniform_int(kGlobalActions - min_hi);
  }
  return spaces;
}

}  // namespace specshare
