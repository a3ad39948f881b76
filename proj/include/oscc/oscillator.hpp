#pragma once

// Damped harmonic oscillator: closed-form analytics, the oscillation-count law
// and its inverse, fixed-step RK4 integration and per-cycle peak extraction.
//
// Units: m [kg], k [N/m], mu [N*s/m], t [s], x [m], v [m/s], energy [J].
// Equation of motion: x'' = -(k/m)(x - x_eq) - (mu/m) x'.

#include <cstdint>
#include <ostream>
#include <vector>

#include "oscc/count.hpp"
#include "oscc/error.hpp"

namespace oscc::osc {

/// mu >= 2*sqrt(k*m): no oscillation, so no period, cycles or count.
class OverdampedError : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its physical domain (m <= 0, gamma0 outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The integration step violates dt < T/100.
class StepSizeError : public Error {
 public:
  using Error::Error;
};

/// The series does not contain a single completed cycle.
class NoPeaks : public Error {
 public:
  using Error::Error;
};

struct OscillatorParams {
  double m = 1.0;
  double k = 100.0;
  double mu = 0.0;
  double gamma0 = 0.1;  // halting threshold on A_i / A_0

  friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;
};

/// Throws DomainError unless m > 0, k > 0, mu >= 0 and 0 < gamma0 < 1.
/// Overdamping is reported by the functions that need a period.
void validate(const OscillatorParams& p);

bool is_underdamped(const OscillatorParams& p);

/// omega_d = (1/2) sqrt(4k/m - mu^2/m^2). Throws OverdampedError.
double damped_angular_frequency(const OscillatorParams& p);

/// mu / (2m), the exponent of the amplitude envelope.
double decay_rate(const OscillatorParams& p);

/// T = 2 pi / omega_d.
double period(const OscillatorParams& p);

/// t_i = i T, the instant the i-th full cycle completes. i >= 1.
double cycle_time(const OscillatorParams& p, std::uint64_t i);

/// Per-cycle amplitude ratio r = exp(-pi (mu/m) / omega_d).
double cycle_ratio(const OscillatorParams& p);

/// A_i = A0 r^i.
double amplitude_at(const OscillatorParams& p, double A0, std::uint64_t i);

/// f(mu) = |ln gamma0| sqrt(4k/m - mu^2/m^2) / (2 pi mu/m): the real-valued
/// number of cycles before A_i / A0 falls to gamma0. +inf for mu = 0.
double count_function(const OscillatorParams& p);

/// The count law exactly as it is usually printed, with 4 pi (not 4 pi^2)
/// under the root. Kept only so tests can document how far it is off; it is
/// inconsistent with the amplitude law and must not be used for counting.
double printed_count_function(const OscillatorParams& p);

/// floor(f(mu)) for mu > 0 (values within 1e-9 relative of an integer snap to
/// it), Unbounded for mu = 0.
Count oscillation_count(const OscillatorParams& p);

/// The unique mu with f(mu) = target:
///   mu = m sqrt( ln^2(gamma0) (k/m) / (target^2 pi^2 + ln^2(gamma0)/4) ).
/// Always underdamped. Throws DomainError for target <= 0 or invalid m, k,
/// gamma0.
double friction_for_target(double m, double k, double gamma0, double target);

/// friction_for_target with an integer count M >= 1.
double friction_for_count(double m, double k, double gamma0, std::uint64_t M);

/// Closed-form solution of the underdamped initial value problem
///   x(0) = x0, x'(0) = v0  (displacements relative to equilibrium)
/// x(t) = e^{-beta t} (x0 cos(w t) + (v0 + beta x0)/w sin(w t)).
/// With v0 = -beta x0 this is the textbook e^{-beta t} A cos(w t) form; with
/// v0 = 0 the extrema fall exactly on t_i = i T with |x| = A0 r^i.
class AnalyticMotion {
 public:
  /// Throws OverdampedError.
  AnalyticMotion(const OscillatorParams& params, double x0, double v0 = 0.0);

  const OscillatorParams& params() const { return params_; }
  double x0() const { return x0_; }
  double v0() const { return v0_; }
  double A0() const { return x0_ < 0 ? -x0_ : x0_; }
  double omega_d() const { return omega_d_; }
  double decay_rate() const { return decay_rate_; }

  double position(double t) const;
  double velocity(double t) const;

 private:
  OscillatorParams params_;
  double x0_;
  double v0_;
  double omega_d_;
  double decay_rate_;
};

inline double analytic_position(const AnalyticMotion& motion, double t) {
  return motion.position(t);
}

/// E = (1/2) m v^2 + (1/2) k x^2, x measured from equilibrium.
double energy(const OscillatorParams& p, double x, double v);

struct SimConfig {
  double x0 = -5.0;
  double v0 = 0.0;
  double dt = 1e-4;
  double t_max = 10.0;
  double equilibrium = 0.0;  // x0 is an absolute position
};

struct Sample {
  double t;
  double x;
  double v;
  double energy;
};

struct TimeSeries {
  std::vector<Sample> samples;
  double dt = 0.0;
  double equilibrium = 0.0;
};

/// Classical fixed-step RK4 on the first-order system (x, v). Samples
/// t_j = j dt for j = 0..ceil(t_max/dt). Throws DomainError for invalid
/// params or config, StepSizeError unless dt < T/100 (underdamped), and
/// OverdampedError when no period exists to check against.
TimeSeries integrate(const OscillatorParams& p, const SimConfig& sim);

struct Peak {
  std::uint64_t i;   // cycle index, from 1
  double t;          // refined time of the extremum
  double amplitude;  // |x - x_eq| at the extremum
};

struct PeakList {
  std::vector<Peak> peaks;
  double A0 = 0.0;  // |x(0) - x_eq|
};

/// Extrema of x on the same side of equilibrium as x(0) (full-cycle returns),
/// refined by a parabola through three samples. Throws NoPeaks when the
/// series contains none.
PeakList extract_peaks(const TimeSeries& series);

/// CSV with header "t,x,v,energy", 17 significant digits.
void write_csv(std::ostream& out, const TimeSeries& series);

/// Minimal SVG: axes and one polyline of x against t.
void write_svg(std::ostream& out, const TimeSeries& series);

}  // namespace oscc::osc
