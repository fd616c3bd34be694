#pragma once

#include <cmath>

#include "specshare/core/errors.hpp"
#include "specshare/nn/network.hpp"

namespace specshare::nn {

// Adaptive-moment optimizer state. Moments mirror the parameter shapes; the
// decay constants are the standard 0.9 / 0.999 with epsilon 1e-8.
template <typename Scalar>
struct AdamState {
  std::vector<Layer<Scalar>> first_moment;
  std::vector<Layer<Scalar>> second_moment;
  long step = 0;
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

template <typename Scalar>
AdamState<Scalar> make_adam(const FeedForwardNet<Scalar>& net, double learning_rate) {
  AdamState<Scalar> state;
  state.learning_rate = learning_rate;
  state.first_moment.resize(net.layers.size());
  state.second_moment.resize(net.layers.size());
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    const auto& layer = net.layers[l];
    state.first_moment[l].weights = MatrixX<Scalar>::Zero(layer.weights.rows(), layer.weights.cols());
    state.first_moment[l].bias = VectorX<Scalar>::Zero(layer.bias.size());
    state.second_moment[l].weights = MatrixX<Scalar>::Zero(layer.weights.rows(), layer.weights.cols());
    state.second_moment[l].bias = VectorX<Scalar>::Zero(layer.bias.size());
  }
  return state;
}

namespace detail {

template <typename Scalar, typename Param>
void adam_update(Param& param, const Param& grad, Param& m, Param& v, Scalar lr_hat,
                 Scalar beta1, Scalar beta2, Scalar sqrt_bc2, Scalar eps) {
  if (!grad.allFinite()) throw TrainingFault("optimizer_step: non-finite gradient");
  m = beta1 * m + (Scalar(1) - beta1) * grad;
  v.array() = beta2 * v.array() + (Scalar(1) - beta2) * grad.array().square();
  // lr_hat folds the first-moment bias correction; sqrt_bc2 the second's.
  param.array() -= lr_hat * m.array() / (v.array().sqrt() / sqrt_bc2 + eps);
}

}  // namespace detail

template <typename Scalar>
void optimizer_step(FeedForwardNet<Scalar>& net, const Gradients<Scalar>& grads,
                    AdamState<Scalar>& state) {
  nn::detail::require(grads.size() == net.layers.size(), "optimizer_step: gradient shape mismatch");
  state.step += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
  const Scalar lr_hat = static_cast<Scalar>(state.learning_rate / bc1);
  const Scalar sqrt_bc2 = static_cast<Scalar>(std::sqrt(bc2));
  const Scalar beta1 = static_cast<Scalar>(state.beta1);
  const Scalar beta2 = static_cast<Scalar>(state.beta2);
  const Scalar eps = static_cast<Scalar>(state.epsilon);
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    nn::detail::require(grads[l].weights.rows() == net.layers[l].weights.rows() &&
                            grads[l].weights.cols() == net.layers[l].weights.cols(),
                        "optimizer_step: gradient shape mismatch");
    detail::adam_update(net.layers[l].weights, grads[l].weights, state.first_moment[l].weights,
                        state.second_moment[l].weights, lr_hat, beta1, beta2, sqrt_bc2, eps);
    detail::adam_update(net.layers[l].bias, grads[l].bias, state.first_moment[l].bias,
                        state.second_moment[l].bias, lr_hat, beta1, beta2, sqrt_bc2, eps);
  }
}

}  // namespace specshare::nn
