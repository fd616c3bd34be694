#pragma once

#include <optional>
#include <span>
#include <vector>

#include "specshare/core/config.hpp"

namespace specshare::harness {

// Window used for end-of-run summaries: the last 500 iterations.
inline constexpr int kFinalWindow = 500;

struct IterationMetrics {
  long iteration = 0;
  double mean_loss = 0.0;  // mean over agents that trained; 0 when none did
  double utilization = 0.0;
  bool feasible = false;
  double population_mean_action = 0.0;  // subchannels
  double epsilon = 0.0;
};

struct WindowSummary {
  double mean_utilization = 0.0;
  double infeasible_fraction = 0.0;
  double variance_population_mean_action = 0.0;
};

struct RunResult {
  std::vector<IterationMetrics> metrics;
  std::optional<WindowSummary> final_window;  // present when iterations >= kFinalWindow
  SimConfig config;
};

// Divide by the maximum absolute value; an all-zero series stays all-zero.
std::vector<double> normalized_series(std::span<const double> values);

WindowSummary summarize_window(std::span<const IterationMetrics> window);

}  // namespace specshare::harness
