#include "swimlab/sightfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "swimlab/error.hpp"

namespace swimlab {

void CameraModel::validate() const {
  if (std::abs(norm(forward) - 1.0) > 1e-9 || std::abs(norm(up) - 1.0) > 1e-9)
    throw Error(Errc::InvalidValue, "camera forward and up must be unit vectors");
  if (std::abs(dot(forward, up)) > 1e-9)
    throw Error(Errc::InvalidValue, "camera up must be orthogonal to forward");
  if (!(hfov_deg > 0.0 && hfov_deg < 180.0) || !(vfov_deg > 0.0 && vfov_deg < 180.0))
    throw Error(Errc::InvalidValue, "camera FOV must be in (0, 180) degrees");
  if (!(near_m > 0.0 && near_m < far_m))
    throw Error(Errc::InvalidValue, "camera requires 0 < near < far");
}

void FeedbackConfig::validate() const {
  if (!(loop_gain >= 0.0)) throw Error(Errc::InvalidValue, "loop_gain must be >= 0");
  if (!(ambient > 0.0)) throw Error(Errc::InvalidValue, "ambient must be > 0");
  if (!(decay >= 0.0 && decay < 1.0))
    throw Error(Errc::InvalidValue, "decay must be in [0, 1)");
  if (iterations < 1) throw Error(Errc::InvalidValue, "iterations must be >= 1");
}

bool camera_sees(const CameraModel& camera, const Vec3& point) {
  camera.validate();
  const Vec3 d = point - camera.position;
  const double depth = dot(d, camera.forward);
  if (depth < camera.near_m || depth > camera.far_m) return false;

  constexpr double deg = std::numbers::pi / 180.0;
  const Vec3 right = cross(camera.forward, camera.up);
  // |offset| <= depth * tan(fov/2) is the inclusive half-angle test; fov < 180
  // keeps the tangent finite
  const double h = std::abs(dot(d, right));
  const double v = std::abs(dot(d, camera.up));
  return h <= depth * std::tan(0.5 * camera.hfov_deg * deg) &&
         v <= depth * std::tan(0.5 * camera.vfov_deg * deg);
}

double loop_fixed_point(bool visible, const FeedbackConfig& cfg) {
  cfg.validate();
  double b = 0.0;
  for (int i = 0; i < cfg.iterations; ++i) {
    if (visible)
      b = std::clamp(cfg.loop_gain * b + cfg.ambient, 0.0, 1.0);
    else
      b = cfg.decay * b;
  }
  return b;
}

FieldCloud sweep_sightfield(const CameraModel& camera, const ScanPath& path,
                            const FeedbackConfig& cfg) {
  camera.validate();
  cfg.validate();
  if (path.poses.empty()) throw Error(Errc::DegeneratePath, "empty scan path");

  FieldCloud cloud;
  cloud.acquisition = Acquisition::Ideal;
  cloud.samples.reserve(path.poses.size());
  for (const auto& pose : path.poses) {
    const double b = loop_fixed_point(camera_sees(camera, pose.position), cfg);
    cloud.samples.push_back({pose.position, Phasor{b, 0.0}});
  }
  return cloud;
}

}  // namespace swimlab
