#pragma once

#include <optional>
#include <span>

#include "specshare/core/config.hpp"
#include "specshare/core/types.hpp"
#include "specshare/meanfield/mean_action.hpp"
#include "specshare/nn/adam.hpp"
#include "specshare/nn/network.hpp"
#include "specshare/rl/policy.hpp"
#include "specshare/rl/replay.hpp"

namespace specshare::rl {

using Net = nn::FeedForwardNet<Real>;

inline constexpr int kHiddenUnits = 64;

// Clipped double estimation: two independently initialized evaluation
// networks trained toward a shared target, plus their Polyak-averaged copies.
struct QNetworkPair {
  Net eval_1;
  Net eval_2;
  Net target_1;
  Net target_2;
};

struct Agent {
  DeviceId id = 0;
  ActionSpace space;
  Algorithm variant = Algorithm::MeanField;
  QNetworkPair nets;
  nn::AdamState<Real> opt_1;
  nn::AdamState<Real> opt_2;
  ReplayBuffer buffer;
  meanfield::MeanAction mean_iterate;  // the smoothed virtual-agent action
  int prev_action = -1;                // -1 until the first request is sent

  Rng act_rng;
  Rng replay_rng;
};

// Network input width: own observation plus the mean action for the
// mean-field variant, observation only for the independent baseline.
int input_dim(Algorithm variant);

// Networks seeded per (run seed, device id, network index); targets start as
// exact copies of their evaluation networks.
Agent make_agent(DeviceId id, ActionSpace space, const SimConfig& config);

// Epsilon-greedy draw from the clipped Q estimate min(eval_1, eval_2) at the
// agent's current observation and mean iterate.
int act(Agent& agent, double epsilon);

// y = r + discount * min_i target_i(s')[a*], with a* greedy under eval_1 on
// the next input. Continuing task: every transition bootstraps.
double td_target(const Experience& experience, const QNetworkPair& nets, ActionSpace space,
                 Algorithm variant, double discount);

struct BatchGrads {
  double loss = 0.0;
  nn::Gradients<Real> grads_1;
  nn::Gradients<Real> grads_2;
};

// Mean over the batch of the summed squared errors of both evaluation
// networks against the (constant) clipped targets; gradients flow only
// through the taken action's output coordinate.
BatchGrads loss_and_grads(std::span<const Experience* const> batch, const Agent& agent,
                          double discount);

// One training round: sample, descend both evaluation networks, soft-update
// both targets. Returns the batch loss, or nullopt while the buffer is still
// smaller than the batch.
std::optional<double> train_step(Agent& agent, double discount, double tau, int batch_size);

}  // namespace specshare::rl
