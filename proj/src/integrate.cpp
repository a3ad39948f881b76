#include <cmath>
#include <string>

#include "oscc/oscillator.hpp"

namespace oscc::osc {

namespace {

struct State {
  double x;  // displacement from equilibrium
  double v;
};

struct Derivative {
  double dx;
  double dv;
};

}  // namespace

TimeSeries integrate(const OscillatorParams& p, const SimConfig& sim) {
  validate(p);
  if (!(std::isfinite(sim.dt) && sim.dt > 0)) {
    throw DomainError("dt must be > 0");
  }
  if (!(std::isfinite(sim.t_max) && sim.t_max > 0)) {
    throw DomainError("t_max must be > 0");
  }
  if (!std::isfinite(sim.x0) || !std::isfinite(sim.v0) ||
      !std::isfinite(sim.equilibrium)) {
    throw DomainError("initial conditions must be finite");
  }
  const double T = period(p);
  if (!(sim.dt < T / 100.0)) {
    throw StepSizeError("dt = " + std::to_string(sim.dt) +
                        " s must be below T/100 = " + std::to_string(T / 100.0) +
                        " s");
  }

  const double stiffness = p.k / p.m;
  const double damping = p.mu / p.m;
  const auto deriv = [&](const State& s) {
    return Derivative{s.v, -stiffness * s.x - damping * s.v};
  };

  const double h = sim.dt;
  const auto steps = static_cast<std::size_t>(std::ceil(sim.t_max / h - 1e-9));

  TimeSeries series;
  series.dt = h;
  series.equilibrium = sim.equilibrium;
  series.samples.reserve(steps + 1);

  State s{sim.x0 - sim.equilibrium, sim.v0};
  series.samples.push_back({0.0, sim.x0, s.v, energy(p, s.x, s.v)});
  for (std::size_t j = 1; j <= steps; ++j) {
    const Derivative k1 = deriv(s);
    const Derivative k2 = deriv({s.x + 0.5 * h * k1.dx, s.v + 0.5 * h * k1.dv});
    const Derivative k3 = deriv({s.x + 0.5 * h * k2.dx, s.v + 0.5 * h * k2.dv});
    const Derivative k4 = deriv({s.x + h * k3.dx, s.v + h * k3.dv});
    s.x += h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    s.v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    series.samples.push_back({static_cast<double>(j) * h,
                              s.x + sim.equilibrium, s.v, energy(p, s.x, s.v)});
  }
  return series;
}

}  // namespace oscc::osc
