#include "specshare/rl/policy.hpp"

namespace specshare::rl {

int greedy_action(const ActionValues& q_values, ActionSpace space) {
  int best = space.lo;
  for (int a = space.lo + 1; a <= space.hi; ++a) {
    if (q_values[a] > q_values[best]) best = a;
  }
  return best;
}

ActionValues policy_probs(const ActionValues& q_values, double epsilon, ActionSpace space) {
  ActionValues probs = ActionValues::Zero();
  const double explore = epsilon / static_cast<double>(space.size());
  for (int a = space.lo; a <= space.hi; ++a) probs[a] = explore;
  probs[greedy_action(q_values, space)] += 1.0 - epsilon;
  return probs;
}

int sample_action(const ActionValues& probs, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  int last_positive = 0;
  for (int a = 0; a < kGlobalActions; ++a) {
    if (probs[a] <= 0.0) continue;
    cumulative += probs[a];
    last_positive = a;
    if (u < cumulative) return a;
  }
  return last_positive;  // guards the u ~ 1 edge under rounding
}

}  // namespace specshare::rl
