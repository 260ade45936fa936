#include "swimlab/lockin.hpp"

#include <cmath>
#include <numbers>

#include "swimlab/error.hpp"

namespace swimlab {

void LockInConfig::validate() const {
  if (!(reference_frequency > 0.0))
    throw Error(Errc::InvalidFrequency, "lock-in reference frequency must be > 0");
  if (!(sample_rate >= 10.0 * reference_frequency))
    throw Error(Errc::AliasingRisk,
                "sample_rate must be at least 10x the reference frequency");
  if (!(time_constant > 0.0))
    throw Error(Errc::InvalidValue, "time_constant must be > 0");
  if (!(time_constant >= 10.0 / sample_rate))
    throw Error(Errc::InvalidValue,
                "time_constant must span at least 10 sample periods");
  if (!(settle_factor >= 5.0))
    throw Error(Errc::InvalidValue, "settle_factor must be >= 5");
}

std::size_t settle_samples(const LockInConfig& cfg) {
  cfg.validate();
  return static_cast<std::size_t>(
      std::ceil(cfg.settle_factor * cfg.time_constant * cfg.sample_rate));
}

Phasor demodulate(std::span<const double> samples, const LockInConfig& cfg) {
  const std::size_t needed = settle_samples(cfg);
  if (samples.size() < needed)
    throw Error(Errc::NotSettled, "too few samples for the lock-in filter to settle");

  const double w = 2.0 * std::numbers::pi * cfg.reference_frequency;
  const double dt = 1.0 / cfg.sample_rate;
  const double alpha = 1.0 - std::exp(-dt / cfg.time_constant);

  double yi = 0.0, yq = 0.0;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    const double wt = w * (static_cast<double>(n) * dt);
    const double mi = samples[n] * LockInConfig::mixer_gain * std::cos(wt);
    const double mq = -samples[n] * LockInConfig::mixer_gain * std::sin(wt);
    yi += alpha * (mi - yi);
    yq += alpha * (mq - yq);
  }
  return {yi, yq};
}

}  // namespace swimlab
