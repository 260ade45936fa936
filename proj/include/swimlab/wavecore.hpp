#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include "swimlab/vec3.hpp"

namespace swimlab {

class GaussianRng;

// Complex baseband value of the wave field at a point: the (I, Q) pair a
// lock-in amplifier reports.
using Phasor = std::complex<double>;

enum class Attenuation { None, InverseDistance };

struct Source {
  Vec3 position;                 // meters
  double amplitude = 1.0;        // dimensionless, >= 0
  double phase_offset = 0.0;     // radians
  double frequency = 0.0;        // Hz, > 0
};

struct Medium {
  double speed = 343.0;          // m/s, > 0
  Attenuation attenuation = Attenuation::InverseDistance;
  double r_min = 1e-3;           // m; clamps the 1/r singularity when a scan grazes a source
};

struct Scene {
  std::vector<Source> sources;   // all driven at one shared frequency
  Medium medium;
  double noise_rms = 0.0;        // additive white Gaussian on time samples only
  std::uint64_t seed = 0;

  // Shared drive frequency. Throws EmptyScene / InvalidValue if the scene is
  // empty or the sources disagree.
  double frequency() const;
  void validate() const;
};

// speed / frequency
double wavelength(double frequency, const Medium& medium);

// Ideal complex field: sum over sources of g(r) * a * exp(i*(phi - k*r)),
// r clamped below by medium.r_min. Noise is never applied here.
Phasor baseband_field_at(const Scene& scene, const Vec3& position);

// Re{ baseband * exp(i*w*t) } + Gaussian noise of RMS scene.noise_rms.
// Deterministic when noise_rms == 0 (the rng is not consumed).
double time_signal_at(const Scene& scene, const Vec3& position, double t, GaussianRng& rng);

}  // namespace swimlab
