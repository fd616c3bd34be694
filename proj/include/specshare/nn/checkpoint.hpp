#pragma once

#include <nlohmann/json.hpp>

#include "specshare/nn/network.hpp"

namespace specshare::nn {

// Checkpoint layout: {"dims": [...], "params": [...]} with parameters flat in
// layer order, weights (column-major) before bias. Values are stored as
// doubles; shortest-round-trip JSON encoding makes the cycle bit-exact.
template <typename Scalar>
nlohmann::json to_checkpoint(const FeedForwardNet<Scalar>& net) {
  nlohmann::json doc;
  doc["dims"] = net.dims();
  std::vector<double> params;
  params.reserve(static_cast<std::size_t>(net.parameter_count()));
  for (const auto& layer : net.layers) {
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) {
      params.push_back(static_cast<double>(layer.weights.data()[i]));
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) {
      params.push_back(static_cast<double>(layer.bias.data()[i]));
    }
  }
  doc["params"] = std::move(params);
  return doc;
}

template <typename Scalar>
FeedForwardNet<Scalar> from_checkpoint(const nlohmann::json& doc) {
  if (!doc.contains("dims") || !doc.contains("params")) {
    throw ConfigError("checkpoint: missing dims or params");
  }
  const auto dims = doc.at("dims").get<std::vector<int>>();
  const auto params = doc.at("params").get<std::vector<double>>();
  FeedForwardNet<Scalar> net = init_network<Scalar>(std::span<const int>(dims), 0);
  if (static_cast<Eigen::Index>(params.size()) != net.parameter_count()) {
    throw ConfigError("checkpoint: parameter count does not match dims");
  }
  std::size_t at = 0;
  for (auto& layer : net.layers) {
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) {
      layer.weights.data()[i] = static_cast<Scalar>(params[at++]);
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) {
      layer.bias.data()[i] = static_cast<Scalar>(params[at++]);
    }
  }
  return net;
}

}  // namespace specshare::nn
