#include <doctest.h>

#include <cmath>
#include <random>

#include "oscc/equiv.hpp"
#include "oscc/oscillator.hpp"
#include "oscc/synth.hpp"
#include "oscc/tm.hpp"

using namespace oscc;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  std::uint64_t below(std::uint64_t n) { return rng() % n; }

  // underdamped parameters whose predicted count stays in [1, 40]
  osc::OscillatorParams params() {
    for (;;) {
      osc::OscillatorParams p;
      p.m = log_uniform(0.1, 10.0);
      p.k = log_uniform(1.0, 1000.0);
      p.gamma0 = uniform(0.02, 0.8);
      p.mu = uniform(0.0, 2.0 * std::sqrt(p.k * p.m));
      if (p.mu == 0.0 || !osc::is_underdamped(p)) continue;
      const double f = osc::count_function(p);
      if (f >= 1.0 && f <= 40.0) return p;
    }
  }
};

// smallest relative distance between any cycle ratio and the threshold
double threshold_clearance(const osc::OscillatorParams& p, std::uint64_t cycles) {
  double worst = 1.0;
  for (std::uint64_t i = 1; i <= cycles; ++i) {
    worst = std::min(worst, std::abs(osc::amplitude_at(p, 1.0, i) / p.gamma0 - 1.0));
  }
  return worst;
}

osc::TimeSeries simulate(const osc::OscillatorParams& p, double x0, double eq,
                         double periods) {
  osc::SimConfig sim;
  sim.equilibrium = eq;
  sim.x0 = x0;
  sim.dt = osc::period(p) / 400.0;
  sim.t_max = periods * osc::period(p);
  return osc::integrate(p, sim);
}

}  // namespace

TEST_CASE("count formula, enumeration and simulation agree") {
  Gen g(1);
  int simulated = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const osc::OscillatorParams p = g.params();
    CAPTURE(p.m);
    CAPTURE(p.k);
    CAPTURE(p.mu);
    CAPTURE(p.gamma0);
    const Count predicted = osc::oscillation_count(p);
    REQUIRE(predicted.is_finite());

    std::uint64_t enumerated = 0;
    while (osc::amplitude_at(p, 1.0, enumerated + 1) > p.gamma0) ++enumerated;
    CHECK(predicted.value() == enumerated);

    // the integrator cannot resolve ratios within its own error of the threshold
    if (threshold_clearance(p, enumerated + 1) < 1e-6) continue;
    ++simulated;
    const auto series = simulate(p, -1.0, 0.0, static_cast<double>(enumerated) + 2.0);
    const auto peaks = osc::extract_peaks(series);
    const auto events = equiv::physical_event_trace(peaks, peaks.A0, p.gamma0, true);
    CHECK(events.consume_count() == enumerated);
    CHECK(events.stopped());
  }
  CHECK(simulated > 90);
}

TEST_CASE("mechanical energy never increases under friction") {
  Gen g(2);
  for (int trial = 0; trial < 30; ++trial) {
    const osc::OscillatorParams p = g.params();
    const auto series = simulate(p, g.uniform(-10.0, 10.0), 0.0, 5.0);
    const double scale = series.samples.front().energy;
    for (std::size_t j = 1; j < series.samples.size(); ++j) {
      REQUIRE(series.samples[j].energy <= series.samples[j - 1].energy + 1e-12 * scale);
    }
  }
}

TEST_CASE("energy is conserved without friction") {
  Gen g(3);
  for (int trial = 0; trial < 10; ++trial) {
    osc::OscillatorParams p = g.params();
    p.mu = 0.0;
    const auto series = simulate(p, g.uniform(0.5, 10.0), 0.0, 10.0);
    const double e0 = series.samples.front().energy;
    for (const auto& s : series.samples) {
      REQUIRE(std::abs(s.energy - e0) <= 1e-6 * e0);
    }
  }
}

TEST_CASE("successive peaks decay by a constant ratio") {
  Gen g(4);
  for (int trial = 0; trial < 30; ++trial) {
    const osc::OscillatorParams p = g.params();
    const double r = osc::cycle_ratio(p);
    const auto peaks = osc::extract_peaks(simulate(p, -3.0, 0.0, 6.0)).peaks;
    REQUIRE(peaks.size() >= 5);
    for (std::size_t i = 1; i < 5; ++i) {
      CHECK(peaks[i].amplitude / peaks[i - 1].amplitude == doctest::Approx(r).epsilon(1e-6));
      CHECK(peaks[i].t - peaks[i - 1].t ==
            doctest::Approx(osc::period(p)).epsilon(1e-5));
    }
  }
}

TEST_CASE("shifting equilibrium and start together leaves the peaks unchanged") {
  Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    const osc::OscillatorParams p = g.params();
    const double x0 = g.uniform(-5.0, 5.0);
    const double c = g.uniform(-100.0, 100.0);
    const auto base = osc::extract_peaks(simulate(p, x0, 0.0, 8.0));
    const auto moved = osc::extract_peaks(simulate(p, x0 + c, c, 8.0));
    REQUIRE(base.peaks.size() == moved.peaks.size());
    for (std::size_t i = 0; i < base.peaks.size(); ++i) {
      CHECK(moved.peaks[i].amplitude ==
            doctest::Approx(base.peaks[i].amplitude).epsilon(1e-9).scale(std::abs(x0)));
    }
  }
}

TEST_CASE("friction inversion round-trips through the count") {
  Gen g(6);
  for (int trial = 0; trial < 200; ++trial) {
    const double m = g.log_uniform(0.1, 10.0);
    const double k = g.log_uniform(1.0, 1000.0);
    const double g0 = g.uniform(0.01, 0.9);
    const std::uint64_t M = 1 + g.below(500);
    const auto [machine, tape] = synth::loop_to_tm({"t", M, {}});
    const auto p = synth::tm_to_oscillator(machine, tape, m, k, g0);
    CHECK(osc::oscillation_count(p) == Count::finite(M));
    CHECK(p.mu < osc::friction_for_count(m, k, g0, M));
  }
}

TEST_CASE("tape mass decreases by one per consumed symbol") {
  const auto spec = tm::oscillator_machine();
  for (std::uint64_t M = 0; M <= 200; ++M) {
    const auto trace = tm::run(spec, tm::unary_tape(Count::finite(M)), 10'000);
    REQUIRE(trace.halted);
    REQUIRE(trace.applied_rules.size() == M + 1);
    REQUIRE(trace.final_config().state == tm::HeadState("q0"));
    const auto events = equiv::tm_event_trace(trace);
    for (std::size_t j = 0; j < trace.configs.size(); ++j) {
      const std::uint64_t consumed = std::min<std::uint64_t>(j, M);
      REQUIRE(trace.configs[j].tape.count_ones() == Count::finite(M - consumed));
      REQUIRE(trace.configs[j].step_count == j);
    }
    REQUIRE(events.consume_count() == M);
  }
}
