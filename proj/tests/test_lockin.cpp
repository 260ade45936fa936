#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "swimlab/error.hpp"
#include "swimlab/lockin.hpp"
#include "swimlab/rng.hpp"
#include "swimlab/wavecore.hpp"

using namespace swimlab;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> tone(double amplitude, double frequency, double phase, double fs,
                         std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = amplitude * std::cos(2.0 * kPi * frequency * static_cast<double>(i) / fs + phase);
  return x;
}

// Ideal-integrator oracle: mix with the reference and average over an integer
// number of reference cycles at the tail of the record. Independent of the IIR
// filter path under test.
Phasor integrator_oracle(const std::vector<double>& x, double f_ref, double fs,
                         std::size_t cycles) {
  const auto period = static_cast<std::size_t>(std::llround(fs / f_ref));
  const std::size_t window = cycles * period;
  REQUIRE(window <= x.size());
  double i_acc = 0.0, q_acc = 0.0;
  for (std::size_t n = x.size() - window; n < x.size(); ++n) {
    const double wt = 2.0 * kPi * f_ref * static_cast<double>(n) / fs;
    i_acc += x[n] * 2.0 * std::cos(wt);
    q_acc += -x[n] * 2.0 * std::sin(wt);
  }
  return {i_acc / window, q_acc / window};
}

}  // namespace

TEST_CASE("settle_samples is the ceiling of factor * tau * fs") {
  CHECK(settle_samples({5000.0, 200000.0, 0.005, 5.0}) == 5000);
  CHECK(settle_samples({5000.0, 100000.0, 0.010, 10.0}) == 10000);
}

TEST_CASE("demodulate recovers amplitude and phase of a reference tone") {
  const LockInConfig cfg{5000.0, 200000.0, 0.005, 5.0};
  const auto x = tone(2.0, 5000.0, kPi / 3.0, cfg.sample_rate, 10000);  // 10 tau

  const Phasor oracle = integrator_oracle(x, cfg.reference_frequency, cfg.sample_rate, 4);
  CHECK(oracle.real() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(oracle.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-6));

  const Phasor out = demodulate(x, cfg);
  CHECK(out.real() == doctest::Approx(1.0).epsilon(0.01));
  CHECK(out.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(0.01));
}

TEST_CASE("demodulate of silence is zero") {
  const LockInConfig cfg{5000.0, 200000.0, 0.005, 5.0};
  const std::vector<double> zeros(8000, 0.0);
  const Phasor out = demodulate(zeros, cfg);
  CHECK(out.real() == 0.0);
  CHECK(out.imag() == 0.0);
}

TEST_CASE("off-frequency interferer is attenuated per the single-pole response") {
  const LockInConfig cfg{5000.0, 200000.0, 0.010, 5.0};
  // unit tone at 6 kHz against the 5 kHz reference: difference frequency 1 kHz
  const auto x = tone(1.0, 6000.0, 0.4, cfg.sample_rate, 30000);
  const double h = 1.0 / std::sqrt(1.0 + std::pow(2.0 * kPi * 1000.0 * 0.010, 2.0));
  const Phasor out = demodulate(x, cfg);
  CHECK(std::abs(out) <= h * 1.05);
}

TEST_CASE("settle_factor 5 bounds the step-response residue") {
  const LockInConfig cfg{5000.0, 200000.0, 0.002, 5.0};
  const std::size_t n = settle_samples(cfg);
  const auto x = tone(1.0, 5000.0, 0.0, cfg.sample_rate, n);
  const Phasor out = demodulate(x, cfg);
  // residue e^-5 ~ 0.67% plus 2f ripple
  const double ripple = 1.0 / (2.0 * 2.0 * kPi * 5000.0 * cfg.time_constant);
  CHECK(std::abs(out - Phasor{1.0, 0.0}) < std::exp(-5.0) + ripple + 1e-3);
}

TEST_CASE("errors: settling contract and aliasing guard") {
  const LockInConfig cfg{5000.0, 200000.0, 0.005, 5.0};
  const std::vector<double> short_record(4999, 0.0);
  CHECK_THROWS_AS(demodulate(short_record, cfg), Error);

  const LockInConfig aliasing{5000.0, 40000.0, 0.005, 5.0};  // 8x reference
  const std::vector<double> x(10000, 0.0);
  CHECK_THROWS_AS(demodulate(x, aliasing), Error);
}

TEST_CASE("property: demodulation is linear in the input") {
  const LockInConfig cfg{5000.0, 100000.0, 0.002, 5.0};
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> scale(-4.0, 4.0);
  std::uniform_real_distribution<double> phase(-kPi, kPi);

  for (int trial = 0; trial < 100; ++trial) {
    const double c = scale(gen);
    const auto x = tone(1.0, 5000.0, phase(gen), cfg.sample_rate, 2000);
    std::vector<double> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = c * x[i];
    const Phasor a = demodulate(x, cfg);
    const Phasor b = demodulate(cx, cfg);
    CHECK(std::abs(b - c * a) <= 1e-12 * (1.0 + std::abs(c * a)));
  }
}

TEST_CASE("property: round trip recovers the baseband phasor") {
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  std::uniform_real_distribution<double> ph(-kPi, kPi);

  const double f = 5000.0;
  const LockInConfig cfg{f, 200000.0, 0.002, 6.0};
  const std::size_t n = settle_samples(cfg) + 2000;

  for (int trial = 0; trial < 40; ++trial) {
    Scene scene;
    scene.sources.push_back({{pos(gen), pos(gen), pos(gen)}, 1.0, ph(gen), f});
    scene.sources.push_back({{pos(gen), pos(gen), pos(gen)}, 0.7, ph(gen), f});
    scene.medium = {347.0, Attenuation::InverseDistance, 1e-3};

    const Vec3 p{pos(gen), pos(gen), 2.0 + pos(gen)};
    GaussianRng rng(trial);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = time_signal_at(scene, p, static_cast<double>(i) / cfg.sample_rate, rng);

    const Phasor truth = baseband_field_at(scene, p);
    const Phasor out = demodulate(x, cfg);
    CHECK(std::abs(std::abs(out) - std::abs(truth)) <= 0.02 * std::abs(truth));
    CHECK(std::abs(std::remainder(std::arg(out) - std::arg(truth), 2.0 * kPi)) <= 0.02);
  }
}

TEST_CASE("property: noise error shrinks like sqrt(tau)") {
  const double f = 5000.0;
  const double fs = 100000.0;
  std::vector<double> rms_by_tau;

  for (const double tau : {0.002, 0.020}) {
    const LockInConfig cfg{f, fs, tau, 5.0};
    const std::size_t n = settle_samples(cfg) + 500;
    double sq_sum = 0.0;
    const int dwells = 40;
    for (int d = 0; d < dwells; ++d) {
      GaussianRng rng(derive_stream(99, d));
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double wt = 2.0 * kPi * f * static_cast<double>(i) / fs;
        x[i] = std::cos(wt) + rng.gaussian();  // amplitude 1, noise RMS 1
      }
      sq_sum += std::norm(demodulate(x, cfg) - Phasor{1.0, 0.0});
    }
    rms_by_tau.push_back(std::sqrt(sq_sum / dwells));
  }

  const double ratio = rms_by_tau[0] / rms_by_tau[1];  // expect ~sqrt(10)
  CHECK(ratio > std::sqrt(10.0) / 1.5);
  CHECK(ratio < std::sqrt(10.0) * 1.5);
}
