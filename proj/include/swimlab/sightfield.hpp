#pragma once
#include "swimlab/scan.hpp"

namespace swimlab {

struct CameraModel {
  Vec3 position;
  Vec3 forward;         // unit
  Vec3 up;              // unit, orthogonal to forward
  double hfov_deg = 0;  // (0, 180)
  double vfov_deg = 0;  // (0, 180)
  double near_m = 0;    // 0 < near < far
  double far_m = 0;

  void validate() const;
};

// Bulb-camera feedback loop model: b <- clamp(gain*b + ambient, 0, 1) while
// the bulb is visible, b <- decay*b while it is not.
struct FeedbackConfig {
  double loop_gain = 0.0;   // >= 0; >= 1 saturates to full brightness
  double ambient = 1e-2;    // > 0, seed brightness epsilon
  double decay = 0.5;       // [0, 1)
  int iterations = 200;

  void validate() const;
};

// Inclusive frustum containment: depth within [near, far] and angular offsets
// within half the field of view on both axes.
bool camera_sees(const CameraModel& camera, const Vec3& point);

// Iterate the feedback map from b = 0 and return the final brightness.
// Limits: visible & gain >= 1 -> 1; visible & gain < 1 -> ambient/(1-gain);
// invisible -> 0.
double loop_fixed_point(bool visible, const FeedbackConfig& cfg);

// Sweep a bulb along the path; per pose the stored phasor is
// (loop_fixed_point(camera_sees(...)), 0). Renderable via the shared pipeline.
FieldCloud sweep_sightfield(const CameraModel& camera, const ScanPath& path,
                            const FeedbackConfig& cfg);

}  // namespace swimlab
