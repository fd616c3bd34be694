#include "specshare/core/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "specshare/core/errors.hpp"

namespace specshare {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError("config: " + message); }

template <typename T>
void read_number(const json& doc, const char* key, T& out) {
  if (!doc.contains(key)) return;
  const auto& value = doc.at(key);
  if (!value.is_number()) fail(std::string(key) + " must be a number");
  out = value.get<T>();
}

void read_seed(const json& doc, const char* key, std::uint64_t& out) {
  if (!doc.contains(key)) return;
  const auto& value = doc.at(key);
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    fail(std::string(key) + " must be an integer");
  }
  out = value.is_number_unsigned() ? value.get<std::uint64_t>()
                                   : static_cast<std::uint64_t>(value.get<std::int64_t>());
}

}  // namespace

void SimConfig::validate() const {
  if (n_devices < 1) fail("n_devices must be >= 1");
  if (n_channels < 1) fail("n_channels must be >= 1");
  if (n_neighbors < 0 || n_neighbors > n_devices - 1) {
    fail("n_neighbors must be in [0, n_devices-1]");
  }
  if (!(smoothing >= 0.0 && smoothing < 1.0)) fail("smoothing must be in [0, 1)");
  if (!(discount > 0.0 && discount < 1.0)) fail("discount must be in (0, 1)");
  if (!(epsilon_start >= 0.0 && epsilon_start <= 1.0)) fail("epsilon_start must be in [0, 1]");
  if (!(epsilon_end >= 0.0 && epsilon_end <= epsilon_start)) {
    fail("epsilon_end must be in [0, epsilon_start]");
  }
  if (!(learning_rate > 0.0)) fail("learning_rate must be positive");
  if (!(target_rate > 0.0 && target_rate <= 1.0)) fail("target_rate must be in (0, 1]");
  if (batch_size < 1) fail("batch_size must be >= 1");
  if (buffer_capacity < 1) fail("buffer_capacity must be >= 1");
  if (iterations < 1) fail("iterations must be >= 1");
}

SimConfig config_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be a JSON object");

  static const char* known[] = {
      "n_devices",     "n_channels",    "n_neighbors",   "smoothing",
      "discount",      "epsilon_start", "epsilon_end",   "learning_rate",
      "target_rate",   "batch_size",    "buffer_capacity", "iterations",
      "seed",          "algorithm",     "action_mode"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail("unknown key '" + key + "'");
  }

  SimConfig config;
  read_number(doc, "n_devices", config.n_devices);
  read_number(doc, "n_channels", config.n_channels);
  read_number(doc, "n_neighbors", config.n_neighbors);
  read_number(doc, "smoothing", config.smoothing);
  read_number(doc, "discount", config.discount);
  read_number(doc, "epsilon_start", config.epsilon_start);
  read_number(doc, "epsilon_end", config.epsilon_end);
  read_number(doc, "learning_rate", config.learning_rate);
  read_number(doc, "target_rate", config.target_rate);
  read_number(doc, "batch_size", config.batch_size);
  read_number(doc, "buffer_capacity", config.buffer_capacity);
  read_number(doc, "iterations", config.iterations);
  read_seed(doc, "seed", config.seed);
  if (doc.contains("algorithm")) {
    const auto name = doc.at("algorithm").get<std::string>();
    if (name == "MeanField") {
      config.algorithm = Algorithm::MeanField;
    } else if (name == "IDQL") {
      config.algorithm = Algorithm::IDQL;
    } else {
      fail("algorithm must be \"MeanField\" or \"IDQL\"");
    }
  }
  if (doc.contains("action_mode")) {
    const auto name = doc.at("action_mode").get<std::string>();
    if (name == "Full") {
      config.action_mode = ActionMode::Full;
    } else if (name == "Heterogeneous") {
      config.action_mode = ActionMode::Heterogeneous;
    } else {
      fail("action_mode must be \"Full\" or \"Heterogeneous\"");
    }
  }
  config.validate();
  return config;
}

SimConfig config_from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return config_from_json_text(buffer.str());
}

std::string config_to_json_text(const SimConfig& config) {
  json doc;
  doc["n_devices"] = config.n_devices;
  doc["n_channels"] = config.n_channels;
  doc["n_neighbors"] = config.n_neighbors;
  doc["smoothing"] = config.smoothing;
  doc["discount"] = config.discount;
  doc["epsilon_start"] = config.epsilon_start;
  doc["epsilon_end"] = config.epsilon_end;
  doc["learning_rate"] = config.learning_rate;
  doc["target_rate"] = config.target_rate;
  doc["batch_size"] = config.batch_size;
  doc["buffer_capacity"] = config.buffer_capacity;
  doc["iterations"] = config.iterations;
  doc["seed"] = config.seed;
  doc["algorithm"] = to_string(config.algorithm);
  doc["action_mode"] = to_string(config.action_mode);
  return doc.dump(2) + "\n";
}

const char* to_string(Algorithm algorithm) {
  return algorithm == Algorithm::MeanField ? "MeanField" : "IDQL";
}

const char* to_string(ActionMode mode) {
  return mode == ActionMode::Full ? "Full" : "Heterogeneous";
}

}  // namespace specshare
