#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "swimlab/lockin.hpp"
#include "swimlab/wavecore.hpp"

namespace swimlab {

enum class PathKind { Linear, Raster2D, Raster3D };

struct SamplePose {
  Vec3 position;      // meters
  double dwell = 0.0; // seconds the sensor rests here
};

struct ScanPath {
  std::vector<SamplePose> poses;
  PathKind kind = PathKind::Linear;
};

enum class Acquisition { Ideal, LockIn };

struct CloudSample {
  Vec3 position;
  Phasor value;
};

// Point-cloud record of a wave field: positions, phasors, and enough metadata
// to reproduce the acquisition.
struct FieldCloud {
  std::vector<CloudSample> samples;
  double frequency = 0.0;     // Hz
  double medium_speed = 0.0;  // m/s
  Acquisition acquisition = Acquisition::Ideal;
  std::uint64_t seed = 0;
};

// n poses evenly spaced from start to end, both endpoints included.
ScanPath linear_path(const Vec3& start, const Vec3& end, std::size_t n, double dwell);

// Inclusive grid over [min_corner, max_corner] in boustrophedon order:
// x fastest with direction alternating per row, y direction alternating per
// plane, z slowest.
ScanPath raster_path(const Vec3& min_corner, const Vec3& max_corner,
                     const std::array<std::size_t, 3>& counts, double dwell);

// Minimal dwell honoring the settling contract: settle_samples + 1 output sample.
double default_dwell(const LockInConfig& cfg);

// Evaluate the ideal baseband field at every pose. Pure per point; `workers`
// only changes wall time, never the result.
FieldCloud acquire_ideal(const Scene& scene, const ScanPath& path, unsigned workers = 1);

// Full simulation: per pose, synthesize dwell*sample_rate time samples
// (noise stream derived from (scene.seed, pose index)) and demodulate.
// The reference restarts at t = 0 each dwell, matching a shared CW generator.
FieldCloud acquire_lockin(const Scene& scene, const ScanPath& path, const LockInConfig& cfg,
                          unsigned workers = 1);

}  // namespace swimlab
