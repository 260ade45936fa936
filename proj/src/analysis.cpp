#include "swimlab/analysis.hpp"

#include <cmath>
#include <vector>

#include "swimlab/error.hpp"

namespace swimlab {

namespace {

// cumulative distance of each sample from the first, along the scan order
std::vector<double> arc_lengths(const FieldCloud& cloud) {
  std::vector<double> s(cloud.samples.size(), 0.0);
  for (std::size_t i = 1; i < cloud.samples.size(); ++i)
    s[i] = s[i - 1] + norm(cloud.samples[i].position - cloud.samples[i - 1].position);
  return s;
}

}  // namespace

double extract_wavelength(const FieldCloud& cloud, Component component) {
  const auto& samples = cloud.samples;
  if (samples.size() < 3)
    throw Error(Errc::NoOscillation, "too few samples to locate zero crossings");

  std::vector<double> value(samples.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    value[i] = component == Component::Re ? samples[i].value.real()
                                          : samples[i].value.imag();
    mean += value[i];
  }
  mean /= static_cast<double>(samples.size());
  for (auto& v : value) v -= mean;

  const std::vector<double> s = arc_lengths(cloud);
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < value.size(); ++i) {
    if (value[i] == 0.0) {
      if (crossings.empty() || crossings.back() != s[i]) crossings.push_back(s[i]);
    } else if (value[i] * value[i + 1] < 0.0) {
      const double t = value[i] / (value[i] - value[i + 1]);
      crossings.push_back(s[i] + t * (s[i + 1] - s[i]));
    }
  }
  if (value.back() == 0.0 && (crossings.empty() || crossings.back() != s.back()))
    crossings.push_back(s.back());

  if (crossings.size() < 3)
    throw Error(Errc::NoOscillation, "fewer than 3 zero crossings along the scan");

  const double mean_spacing =
      (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return 2.0 * mean_spacing;
}

double propagation_speed(double wavelength, double frequency) {
  if (!(wavelength > 0.0) || !(frequency > 0.0))
    throw Error(Errc::InvalidArgument, "wavelength and frequency must be > 0");
  return wavelength * frequency;
}

double theoretical_sound_speed(double temperature_c) {
  if (!(temperature_c > -273.15))
    throw Error(Errc::InvalidArgument, "temperature below absolute zero");
  return 331.3 * std::sqrt(1.0 + temperature_c / 273.15);
}

FringeMeasurement fringe_spacing(const FieldCloud& cloud) {
  const auto& samples = cloud.samples;
  if (samples.size() < 3)
    throw Error(Errc::InsufficientFringes, "too few samples for peak detection");

  std::vector<double> mag(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) mag[i] = std::abs(samples[i].value);

  // 3-point smoothing, endpoints kept as-is
  std::vector<double> smooth = mag;
  for (std::size_t i = 1; i + 1 < mag.size(); ++i)
    smooth[i] = (mag[i - 1] + mag[i] + mag[i + 1]) / 3.0;

  const std::vector<double> s = arc_lengths(cloud);
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < smooth.size(); ++i) {
    if (!(smooth[i] > smooth[i - 1])) continue;
    // plateaus resolve to the leftmost sample
    std::size_t j = i;
    while (j + 1 < smooth.size() && smooth[j + 1] == smooth[i]) ++j;
    if (j + 1 < smooth.size() && smooth[j + 1] < smooth[i]) peaks.push_back(s[i]);
  }

  if (peaks.size() < 2)
    throw Error(Errc::InsufficientFringes, "fewer than 2 magnitude maxima along the scan");

  FringeMeasurement m;
  m.peak_count = peaks.size();
  m.spacing = (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
  return m;
}

FringeMeasurement fringe_spacing(const FieldCloud& cloud, double distance, double separation) {
  if (!(distance > 0.0) || !(separation > 0.0))
    throw Error(Errc::InvalidArgument, "distance and separation must be > 0");
  FringeMeasurement m = fringe_spacing(cloud);
  m.near_field = distance < 5.0 * separation;
  return m;
}

}  // namespace swimlab
