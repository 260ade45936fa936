#pragma once
#include "swimlab/render.hpp"
#include "swimlab/scan.hpp"

namespace swimlab {

struct WaveMeasurement {
  double wavelength = 0.0;               // meters
  double cycle_count = 0.0;              // scan length / wavelength
  double speed = 0.0;                    // m/s, wavelength * frequency
  double relative_error_vs_theory = 0.0; // |speed - theory| / theory
};

// Wavelength as 2x the mean spacing of consecutive zero crossings of the
// de-meaned component along the (ordered) scan, crossings located by linear
// interpolation. Needs at least 3 crossings.
double extract_wavelength(const FieldCloud& cloud, Component component);

// wavelength * frequency
double propagation_speed(double wavelength, double frequency);

// 331.3 * sqrt(1 + T/273.15), T in degrees Celsius.
double theoretical_sound_speed(double temperature_c);

struct FringeMeasurement {
  double spacing = 0.0;        // meters, mean distance between magnitude maxima
  std::size_t peak_count = 0;
  bool near_field = false;     // set when L < 5d, where lambda*L/d is unreliable
};

// Mean spacing of magnitude maxima along the scan after 3-point smoothing.
// A peak is strictly greater than its left neighbor and greater than the first
// differing value to its right (plateaus resolve to their leftmost sample).
FringeMeasurement fringe_spacing(const FieldCloud& cloud);
FringeMeasurement fringe_spacing(const FieldCloud& cloud, double distance, double separation);

}  // namespace swimlab
