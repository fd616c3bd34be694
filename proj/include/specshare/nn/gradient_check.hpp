#pragma once

#include <algorithm>
#include <cmath>

#include "specshare/nn/network.hpp"

namespace specshare::nn {

// Checks backward() against central finite differences of the scalar loss
// L(theta) = 0.5 * ||forward(x)||^2 over every parameter, returning the worst
// relative error. Both gradients exactly zero counts as zero error. Meant to
// run with Scalar = double; float cannot resolve h = 1e-5.
template <typename Scalar>
double gradient_check(const FeedForwardNet<Scalar>& net, const VectorX<Scalar>& x,
                      Scalar h = Scalar(1e-5)) {
  ForwardTrace<Scalar> trace;
  MatrixX<Scalar> column = x;
  MatrixX<Scalar> y = forward_batch(net, column, &trace);
  const Gradients<Scalar> analytic = backward(net, trace, y);

  FeedForwardNet<Scalar> probe = net;
  const auto loss_at = [&probe, &column]() {
    const MatrixX<Scalar> out = forward_batch(probe, column);
    return 0.5 * static_cast<double>(out.squaredNorm());
  };

  double worst = 0.0;
  const auto check_param = [&](Scalar& param, Scalar analytic_grad) {
    const Scalar saved = param;
    param = saved + h;
    const double loss_plus = loss_at();
    param = saved - h;
    const double loss_minus = loss_at();
    param = saved;
    const double fd = (loss_plus - loss_minus) / (2.0 * static_cast<double>(h));
    const double an = static_cast<double>(analytic_grad);
    const double denom = std::abs(fd) + std::abs(an);
    if (denom == 0.0) return;
    worst = std::max(worst, std::abs(fd - an) / std::max(denom, 1e-10));
  };

  for (std::size_t l = 0; l < probe.layers.size(); ++l) {
    auto& layer = probe.layers[l];
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) {
      check_param(layer.weights.data()[i], analytic[l].weights.data()[i]);
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) {
      check_param(layer.bias.data()[i], analytic[l].bias.data()[i]);
    }
  }
  return worst;
}

}  // namespace specshare::nn
