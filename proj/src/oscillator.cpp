#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "oscc/oscillator.hpp"

namespace oscc::osc {

using std::numbers::pi;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void require_underdamped(const OscillatorParams& p) {
  validate(p);
  if (!is_underdamped(p)) {
    throw OverdampedError("mu = " + fmt(p.mu) + " is not below 2*sqrt(k*m) = " +
                          fmt(2.0 * std::sqrt(p.k * p.m)));
  }
}

void validate_mkg(double m, double k, double gamma0) {
  if (!(std::isfinite(m) && m > 0)) throw DomainError("mass must be > 0, got " + fmt(m));
  if (!(std::isfinite(k) && k > 0)) {
    throw DomainError("stiffness must be > 0, got " + fmt(k));
  }
  if (!(gamma0 > 0 && gamma0 < 1)) {
    throw DomainError("gamma0 must lie in (0, 1), got " + fmt(gamma0));
  }
}

}  // namespace

void validate(const OscillatorParams& p) {
  validate_mkg(p.m, p.k, p.gamma0);
  if (!(std::isfinite(p.mu) && p.mu >= 0)) {
    throw DomainError("friction must be >= 0, got " + fmt(p.mu));
  }
}

bool is_underdamped(const OscillatorParams& p) {
  return p.mu < 2.0 * std::sqrt(p.k * p.m);
}

double damped_angular_frequency(const OscillatorParams& p) {
  require_underdamped(p);
  const double gamma = p.mu / p.m;
  return 0.5 * std::sqrt(4.0 * p.k / p.m - gamma * gamma);
}

double decay_rate(const OscillatorParams& p) { return p.mu / (2.0 * p.m); }

double period(const OscillatorParams& p) {
  return 2.0 * pi / damped_angular_frequency(p);
}

double cycle_time(const OscillatorParams& p, std::uint64_t i) {
  if (i == 0) throw DomainError("cycle index starts at 1");
  return static_cast<double>(i) * period(p);
}

double cycle_ratio(const OscillatorParams& p) {
  return std::exp(-pi * (p.mu / p.m) / damped_angular_frequency(p));
}

double amplitude_at(const OscillatorParams& p, double A0, std::uint64_t i) {
  const double log_r = -pi * (p.mu / p.m) / damped_angular_frequency(p);
  return A0 * std::exp(static_cast<double>(i) * log_r);
}

double count_function(const OscillatorParams& p) {
  require_underdamped(p);
  if (p.mu == 0.0) return std::numeric_limits<double>::infinity();
  const double gamma = p.mu / p.m;
  return std::abs(std::log(p.gamma0)) *
         std::sqrt(4.0 * p.k / p.m - gamma * gamma) / (2.0 * pi * gamma);
}

double printed_count_function(const OscillatorParams& p) {
  require_underdamped(p);
  if (p.mu == 0.0) return std::numeric_limits<double>::infinity();
  const double gamma = p.mu / p.m;
  const double ln = std::log(p.gamma0);
  return std::sqrt(ln * ln * (4.0 * p.k / p.m - gamma * gamma) /
                   (4.0 * pi * gamma * gamma));
}

Count oscillation_count(const OscillatorParams& p) {
  const double f = count_function(p);
  if (std::isinf(f)) return Count::unbounded();
  // An exact inversion lands f on an integer up to rounding; don't let the
  // last ulp decide between M and M-1.
  const double nearest = std::round(f);
  if (std::abs(f - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    return Count::finite(static_cast<std::uint64_t>(nearest));
  }
  return Count::finite(static_cast<std::uint64_t>(std::floor(f)));
}

double friction_for_target(double m, double k, double gamma0, double target) {
  validate_mkg(m, k, gamma0);
  if (!(std::isfinite(target) && target > 0)) {
    throw DomainError("oscillation count must be positive, got " + fmt(target));
  }
  const double ln2 = std::log(gamma0) * std::log(gamma0);
  return m * std::sqrt((ln2 * k / m) / (target * target * pi * pi + ln2 / 4.0));
}

double friction_for_count(double m, double k, double gamma0, std::uint64_t M) {
  if (M == 0) throw DomainError("oscillation count must be >= 1");
  return friction_for_target(m, k, gamma0, static_cast<double>(M));
}

AnalyticMotion::AnalyticMotion(const OscillatorParams& params, double x0,
                               double v0)
    : params_(params),
      x0_(x0),
      v0_(v0),
      omega_d_(damped_angular_frequency(params)),
      decay_rate_(osc::decay_rate(params)) {}

double AnalyticMotion::position(double t) const {
  const double b = (v0_ + decay_rate_ * x0_) / omega_d_;
  return std::exp(-decay_rate_ * t) *
         (x0_ * std::cos(omega_d_ * t) + b * std::sin(omega_d_ * t));
}

double AnalyticMotion::velocity(double t) const {
  const double w = omega_d_;
  const double beta = decay_rate_;
  const double b = (v0_ + beta * x0_) / w;
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  return std::exp(-beta * t) *
         ((b * w - beta * x0_) * c - (x0_ * w + beta * b) * s);
}

double energy(const OscillatorParams& p, double x, double v) {
  return 0.5 * p.m * v * v + 0.5 * p.k * x * x;
}

}  // namespace oscc::osc
