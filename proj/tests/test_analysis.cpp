#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "swimlab/analysis.hpp"
#include "swimlab/error.hpp"
#include "swimlab/scan.hpp"

using namespace swimlab;

namespace {

constexpr double kPi = std::numbers::pi;

FieldCloud radial_scan(double frequency, double speed, double from, double to,
                       std::size_t points) {
  Scene scene;
  scene.sources.push_back({{0, 0, 0}, 1.0, 0.0, frequency});
  scene.medium = {speed, Attenuation::None, 1e-3};
  return acquire_ideal(scene, linear_path({from, 0, 0}, {to, 0, 0}, points, 0.01));
}

FieldCloud fringe_scan(double separation, double distance, double halfwidth,
                       std::size_t points) {
  Scene scene;
  scene.sources.push_back({{-0.5 * separation, 0, 0}, 1.0, 0.0, 5000.0});
  scene.sources.push_back({{0.5 * separation, 0, 0}, 1.0, 0.0, 5000.0});
  scene.medium = {350.0, Attenuation::None, 1e-3};  // lambda = 0.07
  return acquire_ideal(scene, linear_path({-halfwidth, distance, 0},
                                          {halfwidth, distance, 0}, points, 0.01));
}

}  // namespace

TEST_CASE("extracted wavelength reproduces the 7 cm sound measurement") {
  const FieldCloud cloud = radial_scan(5000.0, 350.0, 0.2, 1.7, 601);
  CHECK(extract_wavelength(cloud, Component::Re) == doctest::Approx(0.07).epsilon(0.005));
}

TEST_CASE("extracted wavelength reproduces the 2.85 cm radar measurement") {
  const FieldCloud cloud = radial_scan(10.525e9, 3.0e8, 0.1, 0.3, 2000);
  CHECK(extract_wavelength(cloud, Component::Re) ==
        doctest::Approx(0.0285).epsilon(0.005));
}

TEST_CASE("a constant field has no oscillation to measure") {
  FieldCloud cloud;
  cloud.frequency = 5000.0;
  cloud.medium_speed = 347.0;
  for (int i = 0; i < 50; ++i)
    cloud.samples.push_back({{0.01 * i, 0, 0}, {0.8, 0.1}});
  CHECK_THROWS_AS(extract_wavelength(cloud, Component::Re), Error);
}

TEST_CASE("propagation speed is the wavelength-frequency product") {
  CHECK(propagation_speed(0.07, 5000.0) == doctest::Approx(350.0).epsilon(1e-12));
  CHECK(propagation_speed(0.0285, 10.525e9) == doctest::Approx(2.9996e8).epsilon(1e-4));
  CHECK(propagation_speed(1.0, 1.0) == 1.0);
  CHECK_THROWS_AS(propagation_speed(0.0, 100.0), Error);
  CHECK_THROWS_AS(propagation_speed(0.07, -1.0), Error);
}

TEST_CASE("theoretical sound speed matches the quoted values") {
  CHECK(theoretical_sound_speed(27.0) == doctest::Approx(347.3).epsilon(3e-4));
  CHECK(theoretical_sound_speed(0.0) == doctest::Approx(331.3).epsilon(1e-12));
  CHECK(theoretical_sound_speed(20.0) == doctest::Approx(343.2).epsilon(3e-4));
  CHECK_THROWS_AS(theoretical_sound_speed(-300.0), Error);
}

TEST_CASE("fringe spacing follows lambda L / d") {
  // lambda = 0.07, L = 2: near-field flag set because L < 5d, but the central
  // fringes still measure close to 0.28 m
  const FringeMeasurement a = fringe_spacing(fringe_scan(0.5, 2.0, 0.45, 1501), 2.0, 0.5);
  CHECK(a.spacing == doctest::Approx(0.28).epsilon(0.05));
  CHECK(a.near_field);

  const FringeMeasurement b = fringe_spacing(fringe_scan(1.0, 2.0, 0.45, 1501), 2.0, 1.0);
  CHECK(b.spacing == doctest::Approx(0.14).epsilon(0.05));

  // halving the separation doubles the spacing
  CHECK(a.spacing / b.spacing == doctest::Approx(2.0).epsilon(0.05));

  // far-field flag clear when L >= 5d
  const FringeMeasurement c = fringe_spacing(fringe_scan(0.5, 5.0, 1.1, 2001), 5.0, 0.5);
  CHECK_FALSE(c.near_field);
}

TEST_CASE("too few magnitude peaks raise InsufficientFringes") {
  const FieldCloud cloud = fringe_scan(0.5, 2.0, 0.05, 101);  // inside one fringe
  CHECK_THROWS_AS(fringe_spacing(cloud), Error);
}

TEST_CASE("property: fringe spacing times separation is constant in the far field") {
  double product_min = 1e30, product_max = 0.0;
  for (const double d : {0.25, 0.5, 1.0}) {
    const FringeMeasurement m = fringe_spacing(fringe_scan(d, 5.0, 1.5, 3001), 5.0, d);
    CHECK_FALSE(m.near_field);
    const double product = m.spacing * d;
    product_min = std::min(product_min, product);
    product_max = std::max(product_max, product);
  }
  CHECK(product_max / product_min < 1.05);
}

TEST_CASE("property: round trip recovers the configured medium speed") {
  std::mt19937 gen(29);
  std::uniform_real_distribution<double> speed_dist(200.0, 1600.0);
  std::uniform_real_distribution<double> freq_dist(2000.0, 30000.0);

  for (int trial = 0; trial < 15; ++trial) {
    const double speed = speed_dist(gen);
    const double f = freq_dist(gen);
    const double lambda = speed / f;

    Scene scene;
    scene.sources.push_back({{0, 0, 0}, 1.0, 0.0, f});
    scene.medium = {speed, Attenuation::None, 1e-3};
    scene.seed = trial;

    // >= 20 points per wavelength over 15 wavelengths, noiseless lock-in
    const LockInConfig cfg{f, 20.0 * f, 10.0 / f, 5.0};
    const ScanPath path = linear_path({2.0 * lambda, 0, 0}, {17.0 * lambda, 0, 0}, 301,
                                      default_dwell(cfg));
    const FieldCloud cloud = acquire_lockin(scene, path, cfg);
    const double measured = propagation_speed(extract_wavelength(cloud, Component::Re), f);
    CHECK(measured == doctest::Approx(speed).epsilon(0.01));
  }
}

TEST_CASE("property: wavelength extraction ignores amplitude scaling") {
  const FieldCloud base = radial_scan(5000.0, 350.0, 0.2, 1.7, 601);
  const double reference = extract_wavelength(base, Component::Re);

  std::mt19937 gen(31);
  std::uniform_int_distribution<int> exp_dist(-8, 8);
  for (int trial = 0; trial < 100; ++trial) {
    FieldCloud scaled = base;
    const double c = std::ldexp(1.0, exp_dist(gen));  // exact power-of-two scale
    for (auto& s : scaled.samples) s.value *= c;
    CHECK(extract_wavelength(scaled, Component::Re) == reference);

    FieldCloud general = base;
    const double g = 0.3 + 2.7 * (trial / 100.0);
    for (auto& s : general.samples) s.value *= g;
    CHECK(extract_wavelength(general, Component::Re) ==
          doctest::Approx(reference).epsilon(1e-9));
  }
}
