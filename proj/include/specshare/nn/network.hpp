#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "specshare/core/errors.hpp"
#include "specshare/core/rng.hpp"

// Feed-forward value network with manual reverse-mode gradients:
// affine -> ReLU -> affine -> ReLU -> affine. No autodiff, no frameworks;
// the layer count follows the dims list, nothing is hard-coded to 3 layers.

namespace specshare::nn {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct Layer {
  MatrixX<Scalar> weights;  // out x in
  VectorX<Scalar> bias;     // out
};

template <typename Scalar>
struct FeedForwardNet {
  std::vector<Layer<Scalar>> layers;

  int input_dim() const { return static_cast<int>(layers.front().weights.cols()); }
  int output_dim() const { return static_cast<int>(layers.back().weights.rows()); }

  std::vector<int> dims() const {
    std::vector<int> d;
    d.push_back(input_dim());
    for (const auto& layer : layers) d.push_back(static_cast<int>(layer.weights.rows()));
    return d;
  }

  Eigen::Index parameter_count() const {
    Eigen::Index n = 0;
    for (const auto& layer : layers) n += layer.weights.size() + layer.bias.size();
    return n;
  }
};

// Gradient of a scalar loss with respect to every parameter; same shapes as
// the network's layers.
template <typename Scalar>
using Gradients = std::vector<Layer<Scalar>>;

// Activations kept from a forward pass for the backward pass. acts[0] is the
// input batch, acts[i] the post-ReLU output of layer i-1, acts.back() the raw
// network output (columns = batch samples).
template <typename Scalar>
struct ForwardTrace {
  std::vector<MatrixX<Scalar>> acts;
};

namespace detail {
inline void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}
}  // namespace detail

// Weights uniform in (-1/sqrt(fan_in), 1/sqrt(fan_in)), biases zero; the fill
// order is fixed (layer by layer, column-major) so a seed pins every bit.
template <typename Scalar>
FeedForwardNet<Scalar> init_network(std::span<const int> dims, std::uint64_t seed) {
  if (dims.size() < 2) throw ConfigError("init_network: dims needs at least [input, output]");
  for (int d : dims) {
    if (d < 1) throw ConfigError("init_network: every dimension must be >= 1");
  }
  FeedForwardNet<Scalar> net;
  Rng rng(seed);
  net.layers.resize(dims.size() - 1);
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    auto& layer = net.layers[l];
    const int in = dims[l];
    const int out = dims[l + 1];
    layer.weights.resize(out, in);
    layer.bias = VectorX<Scalar>::Zero(out);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in));
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) {
      layer.weights.data()[i] = static_cast<Scalar>(scale * (2.0 * rng.uniform01() - 1.0));
    }
  }
  return net;
}

template <typename Scalar>
FeedForwardNet<Scalar> init_network(std::initializer_list<int> dims, std::uint64_t seed) {
  return init_network<Scalar>(std::span<const int>(dims.begin(), dims.size()), seed);
}

// Batch forward; columns are samples. Fills `trace` when given.
template <typename Scalar>
MatrixX<Scalar> forward_batch(const FeedForwardNet<Scalar>& net, const MatrixX<Scalar>& input,
                              ForwardTrace<Scalar>* trace = nullptr) {
  detail::require(input.rows() == net.input_dim(), "forward: input dimension mismatch");
  if (trace) {
    trace->acts.clear();
    trace->acts.reserve(net.layers.size() + 1);
    trace->acts.push_back(input);
  }
  MatrixX<Scalar> h = input;
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    const auto& layer = net.layers[l];
    MatrixX<Scalar> z = layer.weights * h;
    z.colwise() += layer.bias;
    if (l + 1 < net.layers.size()) z = z.cwiseMax(Scalar(0));
    h = std::move(z);
    if (trace) trace->acts.push_back(h);
  }
  return h;
}

template <typename Scalar>
VectorX<Scalar> forward(const FeedForwardNet<Scalar>& net, const VectorX<Scalar>& x) {
  MatrixX<Scalar> column = x;
  return forward_batch(net, column);
}

// Exact reverse-mode gradients for the batch recorded in `trace`.
// d_output is dLoss/dOutput, one column per sample.
template <typename Scalar>
Gradients<Scalar> backward(const FeedForwardNet<Scalar>& net, const ForwardTrace<Scalar>& trace,
                           const MatrixX<Scalar>& d_output) {
  const std::size_t n_layers = net.layers.size();
  detail::require(trace.acts.size() == n_layers + 1, "backward: trace does not match network");
  detail::require(d_output.rows() == net.output_dim() && d_output.cols() == trace.acts[0].cols(),
                  "backward: d_output shape mismatch");
  Gradients<Scalar> grads(n_layers);
  MatrixX<Scalar> dz = d_output;
  for (std::size_t l = n_layers; l-- > 0;) {
    const MatrixX<Scalar>& layer_input = trace.acts[l];
    grads[l].weights.noalias() = dz * layer_input.transpose();
    grads[l].bias = dz.rowwise().sum();
    if (l > 0) {
      // ReLU mask: the stored post-activation is positive iff the unit fired.
      MatrixX<Scalar> da = net.layers[l].weights.transpose() * dz;
      dz = da.cwiseProduct((layer_input.array() > Scalar(0)).template cast<Scalar>().matrix());
    }
  }
  return grads;
}

// Single-sample convenience used by tests and the gradient checker.
template <typename Scalar>
Gradients<Scalar> backward(const FeedForwardNet<Scalar>& net, const VectorX<Scalar>& x,
                           const VectorX<Scalar>& d_output) {
  ForwardTrace<Scalar> trace;
  MatrixX<Scalar> column = x;
  forward_batch(net, column, &trace);
  MatrixX<Scalar> dy = d_output;
  return backward(net, trace, dy);
}

// target <- tau * source + (1 - tau) * target, parameter by parameter.
template <typename Scalar>
void soft_update_params(FeedForwardNet<Scalar>& target, const FeedForwardNet<Scalar>& source,
                        double tau) {
  if (tau <= 0.0 || tau > 1.0) throw ConfigError("soft_update_params: tau must be in (0, 1]");
  detail::require(target.layers.size() == source.layers.size(),
                  "soft_update_params: architecture mismatch");
  const Scalar t = static_cast<Scalar>(tau);
  for (std::size_t l = 0; l < target.layers.size(); ++l) {
    auto& dst = target.layers[l];
    const auto& src = source.layers[l];
    detail::require(dst.weights.rows() == src.weights.rows() &&
                        dst.weights.cols() == src.weights.cols(),
                    "soft_update_params: architecture mismatch");
    dst.weights = t * src.weights + (Scalar(1) - t) * dst.weights;
    dst.bias = t * src.bias + (Scalar(1) - t) * dst.bias;
  }
}

template <typename Scalar>
bool all_finite(const FeedForwardNet<Scalar>& net) {
  for (const auto& layer : net.layers) {
    if (!layer.weights.allFinite() || !layer.bias.allFinite()) return false;
  }
  return true;
}

}  // namespace specshare::nn
