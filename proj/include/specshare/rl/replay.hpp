#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "specshare/core/rng.hpp"
#include "specshare/env/negotiation.hpp"
#include "specshare/meanfield/mean_action.hpp"

namespace specshare::rl {

// One transition. `mean` is the smoothed iterate the device acted on;
// `next_mean` the iterate after folding in the neighbors' latest requests.
struct Experience {
  env::Observation obs;
  meanfield::MeanAction mean;
  int action = 0;
  double reward = 0.0;
  env::Observation next_obs;
  meanfield::MeanAction next_mean;
};

// Bounded FIFO: once full, every push evicts the oldest entry.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("ReplayBuffer: capacity must be positive");
    slots_.reserve(capacity);
  }

  void push(Experience experience) {
    if (slots_.size() < capacity_) {
      slots_.push_back(std::move(experience));
    } else {
      slots_[head_] = std::move(experience);
      head_ = (head_ + 1) % capacity_;
    }
  }

  std::size_t size() const { return slots_.size(); }
  std::size_t capacity() const { return capacity_; }

  // i = 0 is the oldest entry still stored.
  const Experience& operator[](std::size_t i) const {
    return slots_[(head_ + i) % slots_.size()];
  }

  // Uniform without replacement via partial Fisher-Yates.
  std::vector<std::uint32_t> sample_indices(std::size_t batch, Rng& rng) const {
    if (batch > slots_.size()) {
      throw std::invalid_argument("ReplayBuffer: batch larger than stored experiences");
    }
    std::vector<std::uint32_t> pool(slots_.size());
    for (std::uint32_t i = 0; i < pool.size(); ++i) pool[i] = i;
    for (std::size_t i = 0; i < batch; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(
                                    rng.uniform_int(static_cast<int>(pool.size() - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(batch);
    return pool;
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // oldest slot once the buffer has wrapped
  std::vector<Experience> slots_;
};

}  // namespace specshare::rl
