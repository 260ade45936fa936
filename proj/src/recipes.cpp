#include "swimlab/recipes.hpp"

#include "swimlab/error.hpp"

namespace swimlab {

namespace {

struct Recipe {
  const char* name;
  Mode mode;
  const char* config;
};

// Desk-scale reproductions of the published experiments, runnable end to end.
const Recipe kRecipes[] = {
    {"fig5-radar", Mode::Analyze, R"json({
  "schema": 1,
  "seed": 5,
  "scene": {
    "sources": [{"position": [0, 0, 0], "frequency": 10.525e9}],
    "medium": {"speed": 3.0e8, "attenuation": "none"}
  },
  "path": {"kind": "linear", "start": [0.1, 0, 0], "end": [0.3, 0, 0], "count": 2000},
  "analysis": {"component": "re"}
})json"},

    {"fig7-swim", Mode::Analyze, R"json({
  "schema": 1,
  "seed": 7,
  "scene": {
    "sources": [{"position": [0, 0, 0], "frequency": 5000}],
    "medium": {"speed": 347.0, "attenuation": "none"}
  },
  "path": {"kind": "linear", "start": [0.2, 0, 0], "end": [1.7, 0, 0], "count": 601},
  "lockin": {"sample_rate": 200000, "time_constant": 0.002, "settle_factor": 6},
  "analysis": {"component": "re", "temperature_c": 27}
})json"},

    {"fig8-darkroom", Mode::Render, R"json({
  "schema": 1,
  "seed": 8,
  "scene": {
    "sources": [
      {"position": [-0.05, 0, 0], "frequency": 40000},
      {"position": [0.05, 0, 0], "frequency": 40000}
    ],
    "medium": {"speed": 347.0, "attenuation": "inverse_distance", "r_min": 0.001}
  },
  "path": {"kind": "raster", "min": [-0.15, 0.05, 0], "max": [0.15, 0.35, 0], "counts": [240, 240, 1]},
  "lockin": {"sample_rate": 400000, "time_constant": 0.00025},
  "render": {
    "width": 480, "height": 480, "plane": "xy",
    "extent": {"min": [-0.15, 0.05], "max": [0.15, 0.35]},
    "exposure": "max", "normalization": "global_max", "splat_radius": 1
  }
})json"},

    {"fig11-fringes", Mode::Analyze, R"json({
  "schema": 1,
  "seed": 11,
  "scene": {
    "sources": [{"position": [0, 0, 0], "frequency": 5000}],
    "medium": {"speed": 347.0, "attenuation": "none"}
  },
  "analysis": {
    "component": "re",
    "fringe": {"distance": 5.0, "separations": [0.5, 1.0], "halfwidth": 1.05, "points": 2101}
  },
  "render": {
    "width": 420, "height": 500, "plane": "xy",
    "extent": {"min": [-1.2, 0.2], "max": [1.2, 5.2]},
    "exposure": "max", "normalization": "global_max", "splat_radius": 1
  }
})json"},

    {"fig4-sightfield", Mode::Sightfield, R"json({
  "schema": 1,
  "seed": 4,
  "path": {"kind": "raster", "min": [-2.0, 0.0, 0.0], "max": [2.0, 0.0, 4.0], "counts": [400, 1, 300]},
  "sightfield": {
    "camera": {
      "position": [0, 0, 0], "forward": [0, 0, 1], "up": [0, 1, 0],
      "hfov_deg": 40, "vfov_deg": 30, "near": 0.2, "far": 3.5
    },
    "feedback": {"loop_gain": 1.5, "ambient": 0.01, "decay": 0.5, "iterations": 200}
  },
  "render": {
    "width": 400, "height": 300, "plane": "xz",
    "extent": {"min": [-2.0, 0.0], "max": [2.0, 4.0]},
    "exposure": "max", "normalization": 1.0, "splat_radius": 0
  }
})json"},
};

const Recipe& find(const std::string& name) {
  for (const auto& r : kRecipes)
    if (name == r.name) return r;
  throw Error(Errc::InvalidValue, "unknown recipe: " + name);
}

}  // namespace

std::vector<std::string> recipe_names() {
  std::vector<std::string> names;
  for (const auto& r : kRecipes) names.emplace_back(r.name);
  return names;
}

bool is_recipe(const std::string& name) {
  for (const auto& r : kRecipes)
    if (name == r.name) return true;
  return false;
}

std::string recipe_config(const std::string& name) { return find(name).config; }

Mode recipe_mode(const std::string& name) { return find(name).mode; }

}  // namespace swimlab
