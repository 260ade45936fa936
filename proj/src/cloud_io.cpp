#include "swimlab/cloud_io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "swimlab/error.hpp"

namespace swimlab {

namespace {

const char* acquisition_name(Acquisition a) {
  return a == Acquisition::Ideal ? "Ideal" : "LockIn";
}

void validate_cloud(const FieldCloud& cloud) {
  if (cloud.samples.empty())
    throw Error(Errc::InvalidValue, "field cloud must hold at least one sample");
  for (const auto& s : cloud.samples) {
    if (!is_finite(s.position) || !std::isfinite(s.value.real()) ||
        !std::isfinite(s.value.imag()))
      throw Error(Errc::InvalidValue, "field cloud contains non-finite values");
  }
  // positions must be unique; sort an index copy so the check is n log n
  std::vector<const CloudSample*> order;
  order.reserve(cloud.samples.size());
  for (const auto& s : cloud.samples) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const CloudSample* a, const CloudSample* b) {
    const auto& p = a->position;
    const auto& q = b->position;
    return std::tie(p.x, p.y, p.z) < std::tie(q.x, q.y, q.z);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i]->position == order[i - 1]->position)
      throw Error(Errc::InvalidValue, "field cloud positions must be unique");
  }
}

}  // namespace

std::string cloud_to_string(const FieldCloud& cloud) {
  validate_cloud(cloud);
  std::string out = "swimcloud v1\n";
  char line[256];
  std::snprintf(line, sizeof line,
                "frequency=%.9g speed=%.9g acquisition=%s seed=%" PRIu64 " n=%zu\n",
                cloud.frequency, cloud.medium_speed, acquisition_name(cloud.acquisition),
                cloud.seed, cloud.samples.size());
  out += line;
  for (const auto& s : cloud.samples) {
    std::snprintf(line, sizeof line, "%.9g %.9g %.9g %.9g %.9g\n", s.position.x,
                  s.position.y, s.position.z, s.value.real(), s.value.imag());
    out += line;
  }
  return out;
}

void write_cloud(const FieldCloud& cloud, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + file.string() + " for writing");
  out << cloud_to_string(cloud);
  if (!out) throw Error(Errc::IoError, "short write to " + file.string());
}

FieldCloud cloud_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "swimcloud v1")
    throw Error(Errc::InvalidValue, "not a swimcloud v1 file");
  if (!std::getline(in, line))
    throw Error(Errc::InvalidValue, "swimcloud header line missing");

  FieldCloud cloud;
  char acq[16] = {0};
  std::uint64_t seed = 0;
  std::size_t n = 0;
  if (std::sscanf(line.c_str(),
                  "frequency=%lf speed=%lf acquisition=%15s seed=%" SCNu64 " n=%zu",
                  &cloud.frequency, &cloud.medium_speed, acq, &seed, &n) != 5)
    throw Error(Errc::InvalidValue, "malformed swimcloud header: " + line);
  cloud.seed = seed;
  const std::string acq_str = acq;
  if (acq_str == "Ideal")
    cloud.acquisition = Acquisition::Ideal;
  else if (acq_str == "LockIn")
    cloud.acquisition = Acquisition::LockIn;
  else
    throw Error(Errc::InvalidValue, "unknown acquisition tag: " + acq_str);

  cloud.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw Error(Errc::InvalidValue, "swimcloud truncated: expected more samples");
    CloudSample s;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%lf %lf %lf %lf %lf", &s.position.x, &s.position.y,
                    &s.position.z, &re, &im) != 5)
      throw Error(Errc::InvalidValue, "malformed swimcloud sample: " + line);
    s.value = {re, im};
    cloud.samples.push_back(s);
  }
  validate_cloud(cloud);
  return cloud;
}

FieldCloud read_cloud(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return cloud_from_string(buffer.str());
}

}  // namespace swimlab
