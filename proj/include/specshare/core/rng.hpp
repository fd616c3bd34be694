#pragma once

#include <cstdint>
#include <random>

namespace specshare {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Independent stream seed from one run seed. A stream is identified by a
// small tag plus an optional per-device substream index, so every consumer
// of randomness draws from its own sequence regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t substream = 0) {
  std::uint64_t s = seed;
  std::uint64_t z = splitmix64_next(s);
  s = z ^ (0xD1B54A32D192ED03ull * (stream + 1));
  z = splitmix64_next(s);
  s = z ^ (0x8CB92BA72F3D8DD7ull * (substream + 1));
  return splitmix64_next(s);
}

// mt19937_64 with fixed-layout draws. std::uniform_*_distribution is
// implementation-defined; these helpers are not, so runs replay bit-exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // in [0, 1)
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // in [0, n); multiply-shift, bias < n / 2^64
  int uniform_int(int n) {
    const auto wide = static_cast<unsigned __int128>(engine_()) *
                      static_cast<unsigned __int128>(static_cast<std::uint64_t>(n));
    return static_cast<int>(wide >> 64);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

namespace rng_stream {
inline constexpr std::uint64_t kActionSpaces = 1;
inline constexpr std::uint64_t kNetworkInit = 2;
inline constexpr std::uint64_t kAct = 3;
inline constexpr std::uint64_t kReplay = 4;
}  // namespace rng_stream

}  // namespace specshare
