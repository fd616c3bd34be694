#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "specshare/harness/metrics.hpp"

namespace specshare::harness {

struct SweepEntry;

// Shortest decimal that round-trips the exact double (to_chars).
std::string format_double(double value);

// Header: iteration,mean_loss,utilization,feasible,population_mean_action,epsilon
// UTF-8, LF line endings, booleans as 0/1.
std::string metrics_csv_text(const RunResult& result);
void write_metrics_csv(const std::filesystem::path& path, const RunResult& result);

// One row per run: config echo, status, and the final-window summary.
std::string summary_csv_text(std::span<const SweepEntry> entries);
void write_summary_csv(const std::filesystem::path& path, std::span<const SweepEntry> entries);

}  // namespace specshare::harness
