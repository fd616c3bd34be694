#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specshare/core/config.hpp"
#include "specshare/harness/metrics.hpp"

namespace specshare::harness {

// Linear interpolation from eps_start at t = 0 to eps_end at t = total;
// t beyond total clamps to eps_end.
double epsilon_schedule(long t, long total, double eps_start, double eps_end);

// Exploration is annealed over this leading fraction of the run and then held
// at epsilon_end, so the final window reflects the learned policies.
inline constexpr double kAnnealFraction = 0.9;

// Called once per iteration when installed (progress reporting).
using IterationHook = std::function<void(const IterationMetrics&)>;

// The full training loop: act, exchange means, step the environment, store,
// train, record. Deterministic given the config; throws TrainingFault with
// the iteration and device id if learning diverges.
RunResult run_experiment(const SimConfig& config, const IterationHook& hook = nullptr);

struct SweepEntry {
  std::string name;
  SimConfig config;
  std::optional<RunResult> result;  // empty when the run faulted
  std::string error;
};

// Runs every config, writing <out_dir>/<name>/metrics.csv per run and
// <out_dir>/summary.csv across runs. A faulted run is recorded and the sweep
// continues. Results keep the input order.
std::vector<SweepEntry> sweep(std::span<const SimConfig> configs,
                              const std::filesystem::path& out_dir,
                              std::span<const std::string> names = {});

}  // namespace specshare::harness
