#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swimlab/analysis.hpp"
#include "swimlab/lockin.hpp"
#include "swimlab/render.hpp"
#include "swimlab/scan.hpp"
#include "swimlab/sightfield.hpp"

namespace swimlab {

struct PathSpec {
  PathKind kind = PathKind::Linear;
  // linear
  Vec3 start, end;
  std::size_t count = 0;
  // raster
  Vec3 min_corner, max_corner;
  std::array<std::size_t, 3> counts{1, 1, 1};
  // shared; 0 means "derive from the lock-in settling contract"
  double dwell = 0.0;

  ScanPath build(const std::optional<LockInConfig>& lockin) const;
};

enum class RenderStyle { Field, Dotgraph };

struct RenderSpec {
  RenderConfig cfg;
  RenderStyle style = RenderStyle::Field;
  Component component = Component::Re;  // dotgraph only
};

struct FringeSpec {
  double distance = 0.0;              // L, baseline to scan line
  std::vector<double> separations;    // source separations d to sweep
  double halfwidth = 0.0;             // scan half-length
  std::size_t points = 2001;
};

struct AnalysisSpec {
  Component component = Component::Re;
  std::optional<double> temperature_c;
  std::optional<FringeSpec> fringe;
};

struct SightfieldSpec {
  CameraModel camera;
  FeedbackConfig feedback;
};

// One validated run description; the normalized JSON dump of this structure is
// echoed next to every run's artifacts for reproducibility.
struct RunConfig {
  std::optional<Scene> scene;  // required unless sightfield is present
  std::optional<PathSpec> path;  // required unless the fringe sweep builds its own
  std::optional<LockInConfig> lockin;
  std::optional<RenderSpec> render;
  std::optional<AnalysisSpec> analysis;
  std::optional<SightfieldSpec> sightfield;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// Strict parse of the schema-1 JSON document: unknown keys, missing keys and
// constraint violations are reported with the dotted field path.
RunConfig parse_config(const std::string& text);

// Normalized echo with every default filled in; parse(dump(parse(t))) == parse(t).
std::string dump_config(const RunConfig& cfg);

}  // namespace swimlab
