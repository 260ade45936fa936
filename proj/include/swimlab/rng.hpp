#pragma once
#include <cstdint>
#include <random>

namespace swimlab {

// splitmix64 mixing step; used to derive independent per-pose streams from
// one scene seed so that parallel acquisition cannot change results.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

// Gaussian deviates built from mt19937_64 + Box-Muller. std::normal_distribution
// is implementation-defined, which would break cross-platform byte-exactness of
// the point-cloud files, so the transform is spelled out here.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  // uniform double in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace swimlab
