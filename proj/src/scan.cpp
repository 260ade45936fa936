#include "swimlab/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "swimlab/error.hpp"
#include "swimlab/rng.hpp"

namespace swimlab {

namespace {

// Run f(i) for i in [0, n) on `workers` threads over contiguous slices.
// Output slots are disjoint, so ordering is preserved by construction.
template <typename F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) f(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ScanPath linear_path(const Vec3& start, const Vec3& end, std::size_t n, double dwell) {
  if (n < 2) throw Error(Errc::DegeneratePath, "linear path needs at least 2 poses");
  if (start == end)
    throw Error(Errc::DegeneratePath, "linear path endpoints must differ");
  if (!is_finite(start) || !is_finite(end))
    throw Error(Errc::InvalidArgument, "path endpoints must be finite");
  if (!(dwell > 0.0)) throw Error(Errc::InvalidValue, "dwell must be > 0");

  ScanPath path;
  path.kind = PathKind::Linear;
  path.poses.reserve(n);
  const Vec3 delta = end - start;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    path.poses.push_back({start + t * delta, dwell});
  }
  return path;
}

ScanPath raster_path(const Vec3& min_corner, const Vec3& max_corner,
                     const std::array<std::size_t, 3>& counts, double dwell) {
  const auto [nx, ny, nz] = counts;
  if (nx < 1 || ny < 1 || nz < 1 || nx * ny * nz < 2)
    throw Error(Errc::DegeneratePath, "raster needs >= 1 count per axis, >= 2 total");
  if (!(dwell > 0.0)) throw Error(Errc::InvalidValue, "dwell must be > 0");

  const double span[3] = {max_corner.x - min_corner.x, max_corner.y - min_corner.y,
                          max_corner.z - min_corner.z};
  const std::size_t cnt[3] = {nx, ny, nz};
  double step[3];
  for (int a = 0; a < 3; ++a) {
    if (span[a] < 0.0 || (cnt[a] > 1 && span[a] <= 0.0))
      throw Error(Errc::InvalidExtent, "raster max_corner must exceed min_corner on scanned axes");
    step[a] = cnt[a] > 1 ? span[a] / static_cast<double>(cnt[a] - 1) : 0.0;
  }

  ScanPath path;
  path.kind = nz > 1 ? PathKind::Raster3D : PathKind::Raster2D;
  path.poses.reserve(nx * ny * nz);
  std::size_t row = 0;  // global row parity drives the x serpentine
  for (std::size_t iz = 0; iz < nz; ++iz) {
    for (std::size_t jy = 0; jy < ny; ++jy) {
      // consecutive planes traverse y in opposite directions
      const std::size_t iy = (iz % 2 == 0) ? jy : ny - 1 - jy;
      for (std::size_t jx = 0; jx < nx; ++jx) {
        const std::size_t ix = (row % 2 == 0) ? jx : nx - 1 - jx;
        path.poses.push_back({{min_corner.x + step[0] * static_cast<double>(ix),
                               min_corner.y + step[1] * static_cast<double>(iy),
                               min_corner.z + step[2] * static_cast<double>(iz)},
                              dwell});
      }
      ++row;
    }
  }
  return path;
}

double default_dwell(const LockInConfig& cfg) {
  return static_cast<double>(settle_samples(cfg) + 1) / cfg.sample_rate;
}

FieldCloud acquire_ideal(const Scene& scene, const ScanPath& path, unsigned workers) {
  scene.validate();
  if (path.poses.empty()) throw Error(Errc::DegeneratePath, "empty scan path");

  FieldCloud cloud;
  cloud.frequency = scene.frequency();
  cloud.medium_speed = scene.medium.speed;
  cloud.acquisition = Acquisition::Ideal;
  cloud.seed = scene.seed;
  cloud.samples.resize(path.poses.size());
  parallel_for(path.poses.size(), workers, [&](std::size_t i) {
    cloud.samples[i] = {path.poses[i].position,
                        baseband_field_at(scene, path.poses[i].position)};
  });
  return cloud;
}

FieldCloud acquire_lockin(const Scene& scene, const ScanPath& path, const LockInConfig& cfg,
                          unsigned workers) {
  scene.validate();
  cfg.validate();
  if (path.poses.empty()) throw Error(Errc::DegeneratePath, "empty scan path");
  if (scene.frequency() != cfg.reference_frequency)
    throw Error(Errc::ReferenceMismatch,
                "lock-in reference frequency must equal the scene drive frequency");

  const std::size_t settle = settle_samples(cfg);
  const double w = 2.0 * std::numbers::pi * cfg.reference_frequency;
  const double dt = 1.0 / cfg.sample_rate;

  FieldCloud cloud;
  cloud.frequency = cfg.reference_frequency;
  cloud.medium_speed = scene.medium.speed;
  cloud.acquisition = Acquisition::LockIn;
  cloud.seed = scene.seed;
  cloud.samples.resize(path.poses.size());

  parallel_for(path.poses.size(), workers, [&](std::size_t i) {
    const SamplePose& pose = path.poses[i];
    const auto n = static_cast<std::size_t>(std::llround(pose.dwell * cfg.sample_rate));
    if (n < settle)
      throw Error(Errc::NotSettled, "dwell too short for the lock-in to settle");

    // Same arithmetic as time_signal_at with the baseband sum hoisted out of
    // the per-sample loop.
    const Phasor b = baseband_field_at(scene, pose.position);
    GaussianRng rng(derive_stream(scene.seed, i));
    std::vector<double> samples(n);
    for (std::size_t s = 0; s < n; ++s) {
      const double wt = w * (static_cast<double>(s) * dt);
      double x = b.real() * std::cos(wt) - b.imag() * std::sin(wt);
      if (scene.noise_rms > 0.0) x += scene.noise_rms * rng.gaussian();
      samples[s] = x;
    }
    cloud.samples[i] = {pose.position, demodulate(samples, cfg)};
  });
  return cloud;
}

}  // namespace swimlab
