#include "swimlab/wavecore.hpp"

#include <cmath>
#include <numbers>

#include "swimlab/error.hpp"
#include "swimlab/rng.hpp"

namespace swimlab {

double Scene::frequency() const {
  if (sources.empty()) throw Error(Errc::EmptyScene, "scene has no sources");
  const double f = sources.front().frequency;
  for (const auto& s : sources) {
    if (s.frequency != f)
      throw Error(Errc::InvalidValue,
                  "all sources in a scene must share one drive frequency");
  }
  return f;
}

void Scene::validate() const {
  const double f = frequency();
  if (!(f > 0.0)) throw Error(Errc::InvalidFrequency, "source frequency must be > 0");
  for (const auto& s : sources) {
    if (!is_finite(s.position))
      throw Error(Errc::InvalidArgument, "source position must be finite");
    if (!(s.amplitude >= 0.0))
      throw Error(Errc::InvalidValue, "source amplitude must be >= 0");
    if (!std::isfinite(s.phase_offset))
      throw Error(Errc::InvalidValue, "source phase offset must be finite");
  }
  if (!(medium.speed > 0.0)) throw Error(Errc::InvalidValue, "medium speed must be > 0");
  if (!(medium.r_min > 0.0)) throw Error(Errc::InvalidValue, "medium r_min must be > 0");
  if (!(noise_rms >= 0.0)) throw Error(Errc::InvalidValue, "noise_rms must be >= 0");
}

double wavelength(double frequency, const Medium& medium) {
  if (!(frequency > 0.0))
    throw Error(Errc::InvalidFrequency, "wavelength: frequency must be > 0");
  return medium.speed / frequency;
}

Phasor baseband_field_at(const Scene& scene, const Vec3& position) {
  if (scene.sources.empty()) throw Error(Errc::EmptyScene, "scene has no sources");
  if (!is_finite(position))
    throw Error(Errc::InvalidArgument, "field position must be finite");

  const double f = scene.frequency();
  const double k = 2.0 * std::numbers::pi * f / scene.medium.speed;

  Phasor field{0.0, 0.0};
  for (const auto& s : scene.sources) {
    const double r = std::max(norm(position - s.position), scene.medium.r_min);
    const double g =
        scene.medium.attenuation == Attenuation::InverseDistance ? 1.0 / r : 1.0;
    const double phase = s.phase_offset - k * r;
    field += Phasor{g * s.amplitude * std::cos(phase), g * s.amplitude * std::sin(phase)};
  }
  return field;
}

double time_signal_at(const Scene& scene, const Vec3& position, double t, GaussianRng& rng) {
  if (!(t >= 0.0)) throw Error(Errc::InvalidArgument, "time must be >= 0");
  const Phasor b = baseband_field_at(scene, position);
  const double w = 2.0 * std::numbers::pi * scene.frequency();
  double sample = b.real() * std::cos(w * t) - b.imag() * std::sin(w * t);
  if (scene.noise_rms > 0.0) sample += scene.noise_rms * rng.gaussian();
  return sample;
}

}  // namespace swimlab
