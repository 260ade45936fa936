#pragma once
#include <cstddef>
#include <span>

#include "swimlab/wavecore.hpp"

namespace swimlab {

// Simulated lock-in amplifier front end. The mixer gain is fixed at 2 on both
// channels so a unit cosine at the reference recovers unit magnitude.
struct LockInConfig {
  double reference_frequency = 0.0;  // Hz, > 0
  double sample_rate = 0.0;          // Hz, >= 10x reference
  double time_constant = 0.0;        // s; single-pole low-pass tau
  double settle_factor = 5.0;        // dwell discards settle_factor * tau

  static constexpr double mixer_gain = 2.0;

  void validate() const;
};

// ceil(settle_factor * time_constant * sample_rate): samples to discard before
// the filter output is trusted.
std::size_t settle_samples(const LockInConfig& cfg);

// Synchronous I/Q demodulation: mix with 2*cos(w t) and -2*sin(w t), low-pass
// each product with y[n] = y[n-1] + alpha (x[n] - y[n-1]),
// alpha = 1 - exp(-1/(tau fs)), and return the final (I, Q) pair.
// For A*cos(w t + phi) the steady-state output is A*e^{i phi}.
Phasor demodulate(std::span<const double> samples, const LockInConfig& cfg);

}  // namespace swimlab
