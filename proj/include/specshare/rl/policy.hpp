#pragma once

#include <Eigen/Dense>

#include "specshare/core/rng.hpp"
#include "specshare/core/types.hpp"

namespace specshare::rl {

using ActionValues = Eigen::Matrix<double, kGlobalActions, 1>;

// Highest-valued action inside the device's admissible range; exact ties go
// to the lowest index so behavior is reproducible.
int greedy_action(const ActionValues& q_values, ActionSpace space);

// Annealed epsilon-greedy over the admissible range: the greedy action gets
// 1 - eps + eps/|A|, every other admissible action eps/|A|, the rest zero.
ActionValues policy_probs(const ActionValues& q_values, double epsilon, ActionSpace space);

// Categorical draw from a probability vector.
int sample_action(const ActionValues& probs, Rng& rng);

}  // namespace specshare::rl
