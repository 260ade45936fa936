#include <string>

#include <doctest.h>

#include "swimlab/config.hpp"
#include "swimlab/error.hpp"

using namespace swimlab;

namespace {

const char* kMinimal = R"({
  "schema": 1,
  "scene": {
    "sources": [{"position": [0, 0, 0], "frequency": 5000.0}],
    "medium": {"speed": 347.0}
  },
  "path": {"kind": "linear", "start": [0.2, 0, 0], "end": [1.7, 0, 0], "count": 601}
})";

std::string errc_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return errc_name(e.code());
  }
  return "no-error";
}

std::string message_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "no-error";
}

}  // namespace

TEST_CASE("minimal config fills in every default") {
  const RunConfig cfg = parse_config(kMinimal);
  REQUIRE(cfg.scene.has_value());
  CHECK(cfg.scene->sources.size() == 1);
  CHECK(cfg.scene->sources[0].amplitude == 1.0);
  CHECK(cfg.scene->sources[0].phase_offset == 0.0);
  CHECK(cfg.scene->medium.attenuation == Attenuation::InverseDistance);
  CHECK(cfg.scene->medium.r_min == 1e-3);
  CHECK(cfg.scene->noise_rms == 0.0);
  CHECK(cfg.seed == 0);
  CHECK(cfg.workers == 1);
  REQUIRE(cfg.path.has_value());
  CHECK(cfg.path->kind == PathKind::Linear);
  CHECK(cfg.path->count == 601);
  CHECK(cfg.path->dwell == 1e-3);  // no lock-in: fallback dwell
  CHECK_FALSE(cfg.lockin.has_value());
  CHECK_FALSE(cfg.render.has_value());
}

TEST_CASE("lockin defaults derive from the scene and the settling contract") {
  const std::string text = R"({
    "schema": 1,
    "scene": {
      "sources": [{"position": [0, 0, 0], "frequency": 5000.0}],
      "medium": {"speed": 347.0}
    },
    "path": {"kind": "linear", "start": [0, 0, 0], "end": [1, 0, 0], "count": 11},
    "lockin": {"sample_rate": 200000.0, "time_constant": 0.005}
  })";
  const RunConfig cfg = parse_config(text);
  REQUIRE(cfg.lockin.has_value());
  CHECK(cfg.lockin->reference_frequency == 5000.0);
  CHECK(cfg.lockin->settle_factor == 5.0);
  // dwell normalized to (settle_samples + 1) / fs = 5001 / 200000
  CHECK(cfg.path->dwell == doctest::Approx(5001.0 / 200000.0).epsilon(1e-12));
}

TEST_CASE("missing fields are reported with their dotted path") {
  const std::string no_speed = R"({
    "schema": 1,
    "scene": {
      "sources": [{"position": [0, 0, 0], "frequency": 5000.0}],
      "medium": {}
    },
    "path": {"kind": "linear", "start": [0, 0, 0], "end": [1, 0, 0], "count": 11}
  })";
  CHECK(errc_of(no_speed) == "MissingField");
  CHECK(message_of(no_speed).find("scene.medium.speed") != std::string::npos);

  CHECK(errc_of(R"({"schema": 1})") == "MissingField");  // no scene, no sightfield
}

TEST_CASE("unknown fields are rejected with their dotted path") {
  const std::string extra = R"({
    "schema": 1,
    "scene": {
      "sources": [{"position": [0, 0, 0], "frequency": 5000.0}],
      "medium": {"speed": 347.0, "viscosity": 1.0}
    },
    "path": {"kind": "linear", "start": [0, 0, 0], "end": [1, 0, 0], "count": 11}
  })";
  CHECK(errc_of(extra) == "UnknownField");
  CHECK(message_of(extra).find("scene.medium.viscosity") != std::string::npos);
}

TEST_CASE("the 10x sampling rule is enforced by name") {
  const std::string slow = R"({
    "schema": 1,
    "scene": {
      "sources": [{"position": [0, 0, 0], "frequency": 5000.0}],
      "medium": {"speed": 347.0}
    },
    "path": {"kind": "linear", "start": [0, 0, 0], "end": [1, 0, 0], "count": 11},
    "lockin": {"sample_rate": 40000.0, "time_constant": 0.005}
  })";
  CHECK(errc_of(slow) == "InvalidValue");
  const std::string msg = message_of(slow);
  CHECK(msg.find("lockin.sample_rate") != std::string::npos);
  CHECK(msg.find("10x") != std::string::npos);
}

TEST_CASE("validation rejects out-of-range values with their paths") {
  auto patched = [](const std::string& find, const std::string& replace) {
    std::string t = kMinimal;
    t.replace(t.find(find), find.size(), replace);
    return t;
  };
  CHECK(message_of(patched("\"speed\": 347.0", "\"speed\": -1.0"))
            .find("scene.medium.speed") != std::string::npos);
  CHECK(message_of(patched("\"frequency\": 5000.0", "\"frequency\": 0"))
            .find("frequency") != std::string::npos);
  CHECK(message_of(patched("\"count\": 601", "\"count\": 1")).find("path.count") !=
        std::string::npos);
  CHECK(message_of(patched("\"schema\": 1", "\"schema\": 2")).find("schema") !=
        std::string::npos);
  CHECK(errc_of("{not json") == "InvalidValue");
}

TEST_CASE("scene may be omitted only for a sightfield run") {
  const std::string text = R"({
    "schema": 1,
    "path": {"kind": "raster", "min": [-2, 0, 0], "max": [2, 0, 4], "counts": [41, 1, 31]},
    "sightfield": {
      "camera": {"position": [0, 0, 0], "forward": [0, 0, 1], "up": [0, 1, 0],
                 "hfov_deg": 40.0, "vfov_deg": 30.0, "near": 0.2, "far": 3.5},
      "feedback": {"loop_gain": 1.5}
    }
  })";
  const RunConfig cfg = parse_config(text);
  CHECK_FALSE(cfg.scene.has_value());
  REQUIRE(cfg.sightfield.has_value());
  CHECK(cfg.sightfield->feedback.ambient == 1e-2);
  CHECK(cfg.sightfield->feedback.decay == 0.5);
  CHECK(cfg.sightfield->feedback.iterations == 200);
  CHECK(cfg.path->kind == PathKind::Raster3D);
}

TEST_CASE("path may be omitted only when the fringe sweep builds its own") {
  const std::string text = R"({
    "schema": 1,
    "scene": {
      "sources": [{"position": [0, 0, 0], "frequency": 5000.0}],
      "medium": {"speed": 347.0}
    },
    "analysis": {"fringe": {"distance": 5.0, "separations": [0.5, 1.0]}}
  })";
  const RunConfig cfg = parse_config(text);
  CHECK_FALSE(cfg.path.has_value());
  REQUIRE(cfg.analysis.has_value());
  REQUIRE(cfg.analysis->fringe.has_value());
  CHECK(cfg.analysis->fringe->halfwidth == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(cfg.analysis->fringe->points == 2001);
}

TEST_CASE("normalized dump round-trips byte-for-byte") {
  for (const char* text : {kMinimal}) {
    const RunConfig once = parse_config(text);
    const std::string dumped = dump_config(once);
    const RunConfig twice = parse_config(dumped);
    CHECK(dump_config(twice) == dumped);
  }

  const std::string rich = R"({
    "schema": 1,
    "seed": 42,
    "workers": 4,
    "scene": {
      "sources": [{"position": [-0.05, 0.2, 0], "amplitude": 0.8, "phase": 1.25,
                   "frequency": 40000.0},
                  {"position": [0.05, 0.2, 0], "frequency": 40000.0}],
      "medium": {"speed": 347.0, "attenuation": "none", "r_min": 0.002},
      "noise_rms": 0.05
    },
    "path": {"kind": "raster", "min": [-0.15, 0.05, 0], "max": [0.15, 0.35, 0],
             "counts": [60, 60, 1]},
    "lockin": {"sample_rate": 400000.0, "time_constant": 0.00025, "settle_factor": 6.0},
    "render": {"width": 480, "height": 480, "plane": "xy",
               "extent": {"min": [-0.15, 0.05], "max": [0.15, 0.35]},
               "exposure": "max", "normalization": "global_max", "splat_radius": 1}
  })";
  const std::string dumped = dump_config(parse_config(rich));
  CHECK(dump_config(parse_config(dumped)) == dumped);
  const RunConfig cfg = parse_config(dumped);
  CHECK(cfg.seed == 42);
  CHECK(cfg.workers == 4);
  CHECK(cfg.scene->seed == 42);
  CHECK(cfg.render->cfg.exposure == Exposure::Max);
}
