#include "swimlab/config.hpp"

#include <cmath>
#include <initializer_list>
#include <set>
#include <string>

#include <json.hpp>

#include "swimlab/error.hpp"

namespace swimlab {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void missing(const std::string& path) {
  throw Error(Errc::MissingField, "missing required field: " + path);
}

[[noreturn]] void invalid(const std::string& path, const std::string& reason) {
  throw Error(Errc::InvalidValue, path + ": " + reason);
}

const json& require(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) missing(path.empty() ? key : path + "." + key);
  return obj.at(key);
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

void check_object(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(path, "expected a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.contains(key))
      throw Error(Errc::UnknownField, "unknown field: " + join(path, key.c_str()));
  }
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) invalid(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) invalid(path, "must be finite");
  return d;
}

double get_double(const json& obj, const std::string& path, const char* key) {
  return as_double(require(obj, path, key), join(path, key));
}

double opt_double(const json& obj, const std::string& path, const char* key, double def) {
  if (!obj.contains(key)) return def;
  return as_double(obj.at(key), join(path, key));
}

std::size_t get_count(const json& obj, const std::string& path, const char* key) {
  const json& v = require(obj, path, key);
  const std::string p = join(path, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    invalid(p, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Vec3 as_vec3(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) invalid(path, "expected [x, y, z]");
  return {as_double(v[0], path), as_double(v[1], path), as_double(v[2], path)};
}

Vec3 get_vec3(const json& obj, const std::string& path, const char* key) {
  return as_vec3(require(obj, path, key), join(path, key));
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_string()) invalid(join(path, key), "expected a string");
  return v.get<std::string>();
}

std::string opt_string(const json& obj, const std::string& path, const char* key,
                       const std::string& def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_string()) invalid(join(path, key), "expected a string");
  return v.get<std::string>();
}

Scene parse_scene(const json& j, const std::string& path) {
  check_object(j, path, {"sources", "medium", "noise_rms"});
  Scene scene;

  const json& sources = require(j, path, "sources");
  if (!sources.is_array() || sources.empty())
    invalid(join(path, "sources"), "expected a non-empty array");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::string sp = join(path, "sources") + "[" + std::to_string(i) + "]";
    check_object(sources[i], sp, {"position", "amplitude", "phase", "frequency"});
    Source s;
    s.position = get_vec3(sources[i], sp, "position");
    s.amplitude = opt_double(sources[i], sp, "amplitude", 1.0);
    s.phase_offset = opt_double(sources[i], sp, "phase", 0.0);
    s.frequency = get_double(sources[i], sp, "frequency");
    if (!(s.frequency > 0.0)) invalid(sp + ".frequency", "must be > 0");
    if (!(s.amplitude >= 0.0)) invalid(sp + ".amplitude", "must be >= 0");
    scene.sources.push_back(s);
  }
  for (const auto& s : scene.sources)
    if (s.frequency != scene.sources.front().frequency)
      invalid(join(path, "sources"), "all sources must share one frequency");

  const json& medium = require(j, path, "medium");
  const std::string mp = join(path, "medium");
  check_object(medium, mp, {"speed", "attenuation", "r_min"});
  scene.medium.speed = get_double(medium, mp, "speed");
  if (!(scene.medium.speed > 0.0)) invalid(mp + ".speed", "must be > 0");
  const std::string att = opt_string(medium, mp, "attenuation", "inverse_distance");
  if (att == "none")
    scene.medium.attenuation = Attenuation::None;
  else if (att == "inverse_distance")
    scene.medium.attenuation = Attenuation::InverseDistance;
  else
    invalid(mp + ".attenuation", "expected \"none\" or \"inverse_distance\"");
  scene.medium.r_min = opt_double(medium, mp, "r_min", 1e-3);
  if (!(scene.medium.r_min > 0.0)) invalid(mp + ".r_min", "must be > 0");

  scene.noise_rms = opt_double(j, path, "noise_rms", 0.0);
  if (!(scene.noise_rms >= 0.0)) invalid(join(path, "noise_rms"), "must be >= 0");
  return scene;
}

PathSpec parse_path(const json& j, const std::string& path) {
  PathSpec spec;
  const std::string kind = get_string(j, path, "kind");
  if (kind == "linear") {
    check_object(j, path, {"kind", "start", "end", "count", "dwell"});
    spec.kind = PathKind::Linear;
    spec.start = get_vec3(j, path, "start");
    spec.end = get_vec3(j, path, "end");
    spec.count = get_count(j, path, "count");
    if (spec.count < 2) invalid(join(path, "count"), "must be >= 2");
    if (spec.start == spec.end) invalid(join(path, "end"), "must differ from start");
  } else if (kind == "raster") {
    check_object(j, path, {"kind", "min", "max", "counts", "dwell"});
    spec.min_corner = get_vec3(j, path, "min");
    spec.max_corner = get_vec3(j, path, "max");
    const json& counts = require(j, path, "counts");
    if (!counts.is_array() || counts.size() != 3)
      invalid(join(path, "counts"), "expected [nx, ny, nz]");
    for (int a = 0; a < 3; ++a) {
      if (!counts[a].is_number_integer() || counts[a].get<long long>() < 1)
        invalid(join(path, "counts"), "each axis count must be a positive integer");
      spec.counts[a] = counts[a].get<std::size_t>();
    }
    if (spec.counts[0] * spec.counts[1] * spec.counts[2] < 2)
      invalid(join(path, "counts"), "total pose count must be >= 2");
    spec.kind = spec.counts[2] > 1 ? PathKind::Raster3D : PathKind::Raster2D;
  } else {
    invalid(join(path, "kind"), "expected \"linear\" or \"raster\"");
  }
  spec.dwell = opt_double(j, path, "dwell", 0.0);
  if (spec.dwell < 0.0) invalid(join(path, "dwell"), "must be >= 0");
  return spec;
}

LockInConfig parse_lockin(const json& j, const std::string& path, double scene_frequency) {
  check_object(j, path,
               {"reference_frequency", "sample_rate", "time_constant", "settle_factor"});
  LockInConfig cfg;
  cfg.reference_frequency =
      opt_double(j, path, "reference_frequency", scene_frequency);
  if (cfg.reference_frequency != scene_frequency)
    invalid(join(path, "reference_frequency"),
            "must match the scene drive frequency");
  cfg.sample_rate = get_double(j, path, "sample_rate");
  cfg.time_constant = get_double(j, path, "time_constant");
  cfg.settle_factor = opt_double(j, path, "settle_factor", 5.0);
  if (!(cfg.sample_rate >= 10.0 * cfg.reference_frequency))
    invalid(join(path, "sample_rate"),
            "must be at least 10x the reference frequency (anti-aliasing rule)");
  if (!(cfg.time_constant > 0.0)) invalid(join(path, "time_constant"), "must be > 0");
  if (!(cfg.time_constant >= 10.0 / cfg.sample_rate))
    invalid(join(path, "time_constant"), "must span at least 10 sample periods");
  if (!(cfg.settle_factor >= 5.0)) invalid(join(path, "settle_factor"), "must be >= 5");
  return cfg;
}

RenderSpec parse_render(const json& j, const std::string& path) {
  check_object(j, path,
               {"width", "height", "plane", "extent", "exposure", "normalization",
                "splat_radius", "style", "component"});
  RenderSpec spec;
  RenderConfig& cfg = spec.cfg;
  cfg.width = static_cast<int>(get_count(j, path, "width"));
  cfg.height = static_cast<int>(get_count(j, path, "height"));
  if (cfg.width < 1 || cfg.height < 1)
    invalid(join(path, "width"), "image dimensions must be >= 1");

  const std::string plane = opt_string(j, path, "plane", "xy");
  if (plane == "xy") cfg.plane = ProjectionPlane::XY;
  else if (plane == "xz") cfg.plane = ProjectionPlane::XZ;
  else if (plane == "yz") cfg.plane = ProjectionPlane::YZ;
  else invalid(join(path, "plane"), "expected \"xy\", \"xz\" or \"yz\"");

  const json& extent = require(j, path, "extent");
  const std::string ep = join(path, "extent");
  check_object(extent, ep, {"min", "max"});
  const json& emin = require(extent, ep, "min");
  const json& emax = require(extent, ep, "max");
  if (!emin.is_array() || emin.size() != 2 || !emax.is_array() || emax.size() != 2)
    invalid(ep, "min and max must be [u, v] pairs");
  cfg.min_u = as_double(emin[0], ep + ".min");
  cfg.min_v = as_double(emin[1], ep + ".min");
  cfg.max_u = as_double(emax[0], ep + ".max");
  cfg.max_v = as_double(emax[1], ep + ".max");
  if (!(cfg.max_u > cfg.min_u) || !(cfg.max_v > cfg.min_v))
    invalid(ep, "max must exceed min on both axes");

  const std::string exposure = opt_string(j, path, "exposure", "additive");
  if (exposure == "additive") cfg.exposure = Exposure::Additive;
  else if (exposure == "max") cfg.exposure = Exposure::Max;
  else invalid(join(path, "exposure"), "expected \"additive\" or \"max\"");

  if (j.contains("normalization")) {
    const json& n = j.at("normalization");
    if (n.is_string() && n.get<std::string>() == "global_max") {
      cfg.normalization.global_max = true;
    } else if (n.is_number()) {
      cfg.normalization.global_max = false;
      cfg.normalization.fixed = n.get<double>();
      if (!(cfg.normalization.fixed > 0.0))
        invalid(join(path, "normalization"), "fixed value must be > 0");
    } else {
      invalid(join(path, "normalization"), "expected \"global_max\" or a positive number");
    }
  }

  const json* sr = j.contains("splat_radius") ? &j.at("splat_radius") : nullptr;
  if (sr) {
    if (!sr->is_number_integer() || sr->get<long long>() < 0)
      invalid(join(path, "splat_radius"), "expected an integer >= 0");
    cfg.splat_radius = sr->get<int>();
  }

  const std::string style = opt_string(j, path, "style", "field");
  if (style == "field") spec.style = RenderStyle::Field;
  else if (style == "dotgraph") spec.style = RenderStyle::Dotgraph;
  else invalid(join(path, "style"), "expected \"field\" or \"dotgraph\"");

  const std::string comp = opt_string(j, path, "component", "re");
  if (comp == "re") spec.component = Component::Re;
  else if (comp == "im") spec.component = Component::Im;
  else invalid(join(path, "component"), "expected \"re\" or \"im\"");
  return spec;
}

AnalysisSpec parse_analysis(const json& j, const std::string& path) {
  check_object(j, path, {"component", "temperature_c", "fringe"});
  AnalysisSpec spec;
  const std::string comp = opt_string(j, path, "component", "re");
  if (comp == "re") spec.component = Component::Re;
  else if (comp == "im") spec.component = Component::Im;
  else invalid(join(path, "component"), "expected \"re\" or \"im\"");
  if (j.contains("temperature_c")) {
    const double t = as_double(j.at("temperature_c"), join(path, "temperature_c"));
    if (!(t > -273.15)) invalid(join(path, "temperature_c"), "below absolute zero");
    spec.temperature_c = t;
  }
  if (j.contains("fringe")) {
    const json& f = j.at("fringe");
    const std::string fp = join(path, "fringe");
    check_object(f, fp, {"distance", "separations", "halfwidth", "points"});
    FringeSpec fringe;
    fringe.distance = get_double(f, fp, "distance");
    if (!(fringe.distance > 0.0)) invalid(fp + ".distance", "must be > 0");
    const json& seps = require(f, fp, "separations");
    if (!seps.is_array() || seps.empty())
      invalid(fp + ".separations", "expected a non-empty array");
    for (std::size_t i = 0; i < seps.size(); ++i) {
      const double d = as_double(seps[i], fp + ".separations");
      if (!(d > 0.0)) invalid(fp + ".separations", "separations must be > 0");
      fringe.separations.push_back(d);
    }
    fringe.halfwidth = opt_double(f, fp, "halfwidth", 0.0);
    if (fringe.halfwidth == 0.0)
      fringe.halfwidth = 1.5 * fringe.distance / 5.0;  // ~3 central fringes in far field
    if (!(fringe.halfwidth > 0.0)) invalid(fp + ".halfwidth", "must be > 0");
    fringe.points = f.contains("points") ? get_count(f, fp, "points") : 2001;
    if (fringe.points < 16) invalid(fp + ".points", "must be >= 16");
    spec.fringe = fringe;
  }
  return spec;
}

SightfieldSpec parse_sightfield(const json& j, const std::string& path) {
  check_object(j, path, {"camera", "feedback"});
  SightfieldSpec spec;

  const json& cam = require(j, path, "camera");
  const std::string cp = join(path, "camera");
  check_object(cam, cp, {"position", "forward", "up", "hfov_deg", "vfov_deg", "near", "far"});
  spec.camera.position = get_vec3(cam, cp, "position");
  spec.camera.forward = get_vec3(cam, cp, "forward");
  spec.camera.up = get_vec3(cam, cp, "up");
  spec.camera.hfov_deg = get_double(cam, cp, "hfov_deg");
  spec.camera.vfov_deg = get_double(cam, cp, "vfov_deg");
  spec.camera.near_m = get_double(cam, cp, "near");
  spec.camera.far_m = get_double(cam, cp, "far");
  try {
    spec.camera.validate();
  } catch (const Error& e) {
    invalid(cp, e.what());
  }

  const json& fb = require(j, path, "feedback");
  const std::string fp = join(path, "feedback");
  check_object(fb, fp, {"loop_gain", "ambient", "decay", "iterations"});
  spec.feedback.loop_gain = get_double(fb, fp, "loop_gain");
  spec.feedback.ambient = opt_double(fb, fp, "ambient", 1e-2);
  spec.feedback.decay = opt_double(fb, fp, "decay", 0.5);
  spec.feedback.iterations =
      fb.contains("iterations") ? static_cast<int>(get_count(fb, fp, "iterations")) : 200;
  try {
    spec.feedback.validate();
  } catch (const Error& e) {
    invalid(fp, e.what());
  }
  return spec;
}

}  // namespace

ScanPath PathSpec::build(const std::optional<LockInConfig>& lockin) const {
  double d = dwell;
  if (d <= 0.0) d = lockin ? default_dwell(*lockin) : 1e-3;
  if (kind == PathKind::Linear) return linear_path(start, end, count, d);
  return raster_path(min_corner, max_corner, counts, d);
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidValue, std::string("invalid JSON: ") + e.what());
  }
  check_object(j, "",
               {"schema", "seed", "workers", "scene", "path", "lockin", "render",
                "analysis", "sightfield"});
  const json& schema = require(j, "", "schema");
  if (!schema.is_number_integer() || schema.get<long long>() != 1)
    invalid("schema", "unsupported schema version (expected 1)");

  RunConfig cfg;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
      invalid("seed", "expected an unsigned integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("workers")) {
    cfg.workers = static_cast<unsigned>(get_count(j, "", "workers"));
    if (cfg.workers < 1) invalid("workers", "must be >= 1");
  }

  if (j.contains("sightfield")) cfg.sightfield = parse_sightfield(j.at("sightfield"), "sightfield");
  if (j.contains("scene")) {
    cfg.scene = parse_scene(j.at("scene"), "scene");
    cfg.scene->seed = cfg.seed;
  } else if (!cfg.sightfield) {
    missing("scene");
  }

  if (j.contains("analysis")) cfg.analysis = parse_analysis(j.at("analysis"), "analysis");

  if (j.contains("path")) {
    cfg.path = parse_path(j.at("path"), "path");
  } else if (!(cfg.analysis && cfg.analysis->fringe)) {
    missing("path");  // only the fringe sweep builds its own scan line
  }

  if (j.contains("lockin")) {
    if (!cfg.scene) invalid("lockin", "requires a scene");
    cfg.lockin = parse_lockin(j.at("lockin"), "lockin", cfg.scene->frequency());
  }
  if (j.contains("render")) cfg.render = parse_render(j.at("render"), "render");

  // normalize: resolve the dwell default so the echoed config is explicit
  if (cfg.path && cfg.path->dwell <= 0.0)
    cfg.path->dwell = cfg.lockin ? default_dwell(*cfg.lockin) : 1e-3;

  return cfg;
}

std::string dump_config(const RunConfig& cfg) {
  json j;
  j["schema"] = 1;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  if (cfg.scene) {
    json scene;
    json sources = json::array();
    for (const auto& s : cfg.scene->sources) {
      sources.push_back({{"position", {s.position.x, s.position.y, s.position.z}},
                         {"amplitude", s.amplitude},
                         {"phase", s.phase_offset},
                         {"frequency", s.frequency}});
    }
    scene["sources"] = sources;
    scene["medium"] = {
        {"speed", cfg.scene->medium.speed},
        {"attenuation",
         cfg.scene->medium.attenuation == Attenuation::None ? "none" : "inverse_distance"},
        {"r_min", cfg.scene->medium.r_min}};
    scene["noise_rms"] = cfg.scene->noise_rms;
    j["scene"] = scene;
  }
  if (cfg.path) {
    json p;
    if (cfg.path->kind == PathKind::Linear) {
      p["kind"] = "linear";
      p["start"] = {cfg.path->start.x, cfg.path->start.y, cfg.path->start.z};
      p["end"] = {cfg.path->end.x, cfg.path->end.y, cfg.path->end.z};
      p["count"] = cfg.path->count;
    } else {
      p["kind"] = "raster";
      p["min"] = {cfg.path->min_corner.x, cfg.path->min_corner.y, cfg.path->min_corner.z};
      p["max"] = {cfg.path->max_corner.x, cfg.path->max_corner.y, cfg.path->max_corner.z};
      p["counts"] = {cfg.path->counts[0], cfg.path->counts[1], cfg.path->counts[2]};
    }
    p["dwell"] = cfg.path->dwell;
    j["path"] = p;
  }
  if (cfg.lockin) {
    j["lockin"] = {{"reference_frequency", cfg.lockin->reference_frequency},
                   {"sample_rate", cfg.lockin->sample_rate},
                   {"time_constant", cfg.lockin->time_constant},
                   {"settle_factor", cfg.lockin->settle_factor}};
  }
  if (cfg.render) {
    const RenderConfig& r = cfg.render->cfg;
    json rj;
    rj["width"] = r.width;
    rj["height"] = r.height;
    rj["plane"] = r.plane == ProjectionPlane::XY   ? "xy"
                  : r.plane == ProjectionPlane::XZ ? "xz"
                                                   : "yz";
    rj["extent"] = {{"min", {r.min_u, r.min_v}}, {"max", {r.max_u, r.max_v}}};
    rj["exposure"] = r.exposure == Exposure::Additive ? "additive" : "max";
    if (r.normalization.global_max)
      rj["normalization"] = "global_max";
    else
      rj["normalization"] = r.normalization.fixed;
    rj["splat_radius"] = r.splat_radius;
    rj["style"] = cfg.render->style == RenderStyle::Field ? "field" : "dotgraph";
    rj["component"] = cfg.render->component == Component::Re ? "re" : "im";
    j["render"] = rj;
  }
  if (cfg.analysis) {
    json a;
    a["component"] = cfg.analysis->component == Component::Re ? "re" : "im";
    if (cfg.analysis->temperature_c) a["temperature_c"] = *cfg.analysis->temperature_c;
    if (cfg.analysis->fringe) {
      a["fringe"] = {{"distance", cfg.analysis->fringe->distance},
                     {"separations", cfg.analysis->fringe->separations},
                     {"halfwidth", cfg.analysis->fringe->halfwidth},
                     {"points", cfg.analysis->fringe->points}};
    }
    j["analysis"] = a;
  }
  if (cfg.sightfield) {
    const CameraModel& c = cfg.sightfield->camera;
    const FeedbackConfig& f = cfg.sightfield->feedback;
    j["sightfield"] = {
        {"camera",
         {{"position", {c.position.x, c.position.y, c.position.z}},
          {"forward", {c.forward.x, c.forward.y, c.forward.z}},
          {"up", {c.up.x, c.up.y, c.up.z}},
          {"hfov_deg", c.hfov_deg},
          {"vfov_deg", c.vfov_deg},
          {"near", c.near_m},
          {"far", c.far_m}}},
        {"feedback",
         {{"loop_gain", f.loop_gain},
          {"ambient", f.ambient},
          {"decay", f.decay},
          {"iterations", f.iterations}}}};
  }
  return j.dump(2) + "\n";
}

}  // namespace swimlab
