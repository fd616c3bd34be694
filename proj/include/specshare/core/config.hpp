#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace specshare {

enum class Algorithm { MeanField, IDQL };
enum class ActionMode { Full, Heterogeneous };

// One negotiation run, fully specified. Defaults follow the headline
// simulation setup; any field can be overridden from JSON or CLI flags.
struct SimConfig {
  int n_devices = 60;
  int n_channels = 500;
  int n_neighbors = 10;
  double smoothing = 0.9;     // weight kept on the previous mean-action iterate
  double discount = 0.95;
  double epsilon_start = 0.9;
  double epsilon_end = 0.0;
  double learning_rate = 0.001;
  double target_rate = 0.01;  // Polyak rate for target networks
  int batch_size = 32;
  int buffer_capacity = 1000;
  long iterations = 5000;
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::MeanField;
  ActionMode action_mode = ActionMode::Full;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// JSON keys match the field names exactly; unknown keys are rejected,
// missing keys keep their defaults.
SimConfig config_from_json_text(const std::string& text);
SimConfig config_from_json_file(const std::filesystem::path& path);
std::string config_to_json_text(const SimConfig& config);

const char* to_string(Algorithm algorithm);
const char* to_string(ActionMode mode);

}  // namespace specshare
