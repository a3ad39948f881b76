#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "oscc/oscillator.hpp"

using namespace oscc;
using namespace oscc::osc;

namespace {

// frozen from tests/oracles/derive_values.py (50-digit arithmetic)
constexpr double kPeriodUndamped = 0.62831853071795865;
constexpr double kPeriod073 = 0.62873748806268121;
constexpr double kOmega073 = 9.9933365299083169;
constexpr double kRatio073 = 0.79493956733905532;
constexpr double kA1 = 3.9746978366952766;
constexpr double kA10overA0 = 0.1007722930737446;
constexpr double kA11overA0 = 0.080107883055807015;
constexpr double kCount073 = 10.033523416920568;
constexpr double kPrintedCount073 = 17.783957218471532;

const OscillatorParams kWorked{1.0, 100.0, 0.73, 0.1};

}  // namespace

TEST_CASE("period and frequency") {
  CHECK(period({1, 100, 0, 0.1}) == doctest::Approx(kPeriodUndamped).epsilon(1e-14));
  CHECK(period(kWorked) == doctest::Approx(kPeriod073).epsilon(1e-14));
  CHECK(damped_angular_frequency(kWorked) == doctest::Approx(kOmega073).epsilon(1e-14));
  CHECK(decay_rate(kWorked) == doctest::Approx(0.365).epsilon(1e-15));
  CHECK(cycle_time(kWorked, 10) == doctest::Approx(10 * kPeriod073).epsilon(1e-14));
  CHECK_THROWS_AS(cycle_time(kWorked, 0), DomainError);
}

TEST_CASE("amplitude decay") {
  CHECK(cycle_ratio(kWorked) == doctest::Approx(kRatio073).epsilon(1e-14));
  CHECK(amplitude_at(kWorked, 5.0, 1) == doctest::Approx(kA1).epsilon(1e-14));
  CHECK(amplitude_at(kWorked, 1.0, 10) == doctest::Approx(kA10overA0).epsilon(1e-13));
  CHECK(amplitude_at(kWorked, 1.0, 11) == doctest::Approx(kA11overA0).epsilon(1e-13));
  CHECK(amplitude_at(kWorked, 5.0, 0) == 5.0);
  CHECK(amplitude_at({1, 100, 0, 0.1}, 5.0, 1000) == 5.0);
}

TEST_CASE("count function") {
  CHECK(count_function(kWorked) == doctest::Approx(kCount073).epsilon(1e-13));
  CHECK(printed_count_function(kWorked) ==
        doctest::Approx(kPrintedCount073).epsilon(1e-13));
  CHECK(std::isinf(count_function({1, 100, 0, 0.1})));
  CHECK(oscillation_count(kWorked) == Count::finite(10));
  CHECK(oscillation_count({1, 100, 0.73, 0.05}) == Count::finite(13));
  CHECK(oscillation_count({1, 100, 0, 0.1}).is_unbounded());
}

TEST_CASE("count agrees with cycle enumeration") {
  // largest i with A_i / A0 > gamma0
  for (double mu : {0.05, 0.3, 0.73, 1.7, 4.0, 9.0, 15.0}) {
    for (double g0 : {0.01, 0.05, 0.1, 0.5, 0.9}) {
      const OscillatorParams p{1.0, 100.0, mu, g0};
      std::uint64_t n = 0;
      while (amplitude_at(p, 1.0, n + 1) > g0) ++n;
      CAPTURE(mu);
      CAPTURE(g0);
      CHECK(oscillation_count(p) == Count::finite(n));
    }
  }
}

TEST_CASE("friction inversion") {
  CHECK(friction_for_count(1, 100, 0.1, 1) ==
        doctest::Approx(6.8818009800966299).epsilon(1e-13));
  CHECK(friction_for_count(1, 100, 0.1, 10) ==
        doctest::Approx(0.73244393274966642).epsilon(1e-13));
  CHECK(friction_for_count(1, 100, 0.1, 20) ==
        doctest::Approx(0.36640629476425844).epsilon(1e-13));
  CHECK(friction_for_target(1, 100, 0.1, 10.05) ==
        doctest::Approx(0.72880478399966727).epsilon(1e-13));
  for (double target : {0.5, 1.0, 3.25, 10.0, 77.7, 1000.0}) {
    const double mu = friction_for_target(2.0, 30.0, 0.2, target);
    CHECK(count_function({2.0, 30.0, mu, 0.2}) == doctest::Approx(target).epsilon(1e-12));
  }
  CHECK_THROWS_AS(friction_for_count(1, 100, 0.1, 0), DomainError);
  CHECK_THROWS_AS(friction_for_target(1, 100, 0.1, -1.0), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(period({1, 100, 20.0, 0.1}), OverdampedError);
  CHECK_THROWS_AS(period({1, 100, 25.0, 0.1}), OverdampedError);
  CHECK_THROWS_AS(oscillation_count({1, 100, 25.0, 0.1}), OverdampedError);
  CHECK_THROWS_AS(AnalyticMotion({1, 100, 25.0, 0.1}, 1.0), OverdampedError);
  CHECK_THROWS_AS(validate({0, 100, 0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(validate({1, -1, 0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(validate({1, 100, -0.1, 0.1}), DomainError);
  CHECK_THROWS_AS(validate({1, 100, 0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(validate({1, 100, 0.1, 1.0}), DomainError);
  CHECK_THROWS_AS(validate({1, 100, std::numeric_limits<double>::quiet_NaN(), 0.1}),
                  DomainError);
  CHECK_NOTHROW(validate(kWorked));
  CHECK(is_underdamped(kWorked));
  CHECK_FALSE(is_underdamped({1, 100, 20.0, 0.1}));
}

TEST_CASE("energy") {
  CHECK(energy(kWorked, -5.0, 0.0) == doctest::Approx(1250.0));
  CHECK(energy(kWorked, 0.0, 0.0) == 0.0);
  CHECK(energy(kWorked, 1.0, 1.0) == doctest::Approx(50.5));
  CHECK(energy({2.0, 100, 0, 0.1}, 1.0, 1.0) == doctest::Approx(51.0));
}

TEST_CASE("analytic motion satisfies the initial conditions") {
  const AnalyticMotion motion(kWorked, -5.0);
  CHECK(motion.position(0.0) == doctest::Approx(-5.0));
  CHECK(motion.velocity(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(motion.position(kPeriod073)) == doctest::Approx(kA1).epsilon(1e-12));
  CHECK(motion.velocity(kPeriod073) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(motion.A0() == 5.0);
  CHECK(analytic_position(motion, 0.3) == motion.position(0.3));
}

TEST_CASE("integrate") {
  SimConfig sim;
  sim.t_max = 11 * kPeriod073;
  const TimeSeries series = integrate(kWorked, sim);
  REQUIRE(series.samples.size() > 2);
  CHECK(series.samples.front().t == 0.0);
  CHECK(series.samples.front().x == -5.0);
  CHECK(series.samples.front().energy == doctest::Approx(1250.0));
  CHECK(series.samples.back().t == doctest::Approx(sim.t_max).epsilon(1e-3));

  const AnalyticMotion motion(kWorked, -5.0);
  double worst = 0.0;
  for (const auto& s : series.samples) {
    worst = std::max(worst, std::abs(s.x - motion.position(s.t)));
  }
  CHECK(worst < 1e-9);

  SimConfig coarse = sim;
  coarse.dt = 0.01;
  CHECK_THROWS_AS(integrate(kWorked, coarse), StepSizeError);
  coarse.dt = -1e-4;
  CHECK_THROWS_AS(integrate(kWorked, coarse), Error);
}

TEST_CASE("extract_peaks") {
  SimConfig sim;
  sim.t_max = 12 * kPeriod073;
  const PeakList peaks = extract_peaks(integrate(kWorked, sim));
  CHECK(peaks.A0 == 5.0);
  REQUIRE(peaks.peaks.size() >= 11);
  for (std::size_t n = 0; n < 11; ++n) {
    const auto& pk = peaks.peaks[n];
    CHECK(pk.i == n + 1);
    CHECK(pk.t == doctest::Approx((n + 1) * kPeriod073).epsilon(1e-6));
    CHECK(pk.amplitude ==
          doctest::Approx(5.0 * std::pow(kRatio073, n + 1)).epsilon(1e-7));
  }
  CHECK(peaks.peaks[0].amplitude == doctest::Approx(kA1).epsilon(1e-9));
  CHECK(peaks.peaks[9].amplitude / 5.0 > 0.1);
  CHECK(peaks.peaks[10].amplitude / 5.0 <= 0.1);

  SUBCASE("half a period contains no returning peak") {
    SimConfig half;
    half.t_max = 0.5 * kPeriod073;
    CHECK_THROWS_AS(extract_peaks(integrate(kWorked, half)), NoPeaks);
  }
  SUBCASE("starting at equilibrium has no amplitude") {
    SimConfig rest;
    rest.x0 = 0.0;
    rest.t_max = 2.0;
    CHECK_THROWS_AS(extract_peaks(integrate(kWorked, rest)), NoPeaks);
  }
}

TEST_CASE("series output") {
  SimConfig sim;
  sim.t_max = 0.01;
  sim.dt = 1e-3;
  const TimeSeries series = integrate(kWorked, sim);
  std::ostringstream csv;
  write_csv(csv, series);
  std::istringstream in(csv.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,x,v,energy");
  std::size_t rows = 0;
  for (std::string l; std::getline(in, l);) ++rows;
  CHECK(rows == series.samples.size());

  std::ostringstream svg;
  write_svg(svg, series);
  CHECK(svg.str().rfind("<svg", 0) == 0);
  CHECK(svg.str().find("<polyline") != std::string::npos);
  CHECK(svg.str().find("</svg>") != std::string::npos);
}
