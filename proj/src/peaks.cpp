#include <algorithm>
#include <cmath>
#include <string>

#include "oscc/oscillator.hpp"

namespace oscc::osc {

PeakList extract_peaks(const TimeSeries& series) {
  const auto& s = series.samples;
  if (s.size() < 3) throw NoPeaks("series has fewer than 3 samples");

  const double eq = series.equilibrium;
  const double d0 = s.front().x - eq;
  if (d0 == 0.0) throw NoPeaks("x(0) sits at equilibrium; no reference side");
  const double side = d0 > 0 ? 1.0 : -1.0;

  // Work in "outward" coordinates: u > 0 on the starting side, w > 0 while
  // moving away from equilibrium on that side.
  const auto u = [&](std::size_t j) { return side * (s[j].x - eq); };
  const auto w = [&](std::size_t j) { return side * s[j].v; };

  PeakList out;
  out.A0 = std::abs(d0);

  // A full-cycle return needs a visit to the other side first; this also
  // rejects the turning point of an outward initial velocity.
  bool crossed = false;
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (u(j) <= 0.0) crossed = true;
    if (!(crossed && w(j - 1) > 0.0 && w(j) <= 0.0 && u(j) > 0.0)) continue;

    std::size_t c = u(j - 1) > u(j) ? j - 1 : j;
    c = std::clamp<std::size_t>(c, 1, s.size() - 2);
    const double ym = u(c - 1);
    const double y0 = u(c);
    const double yp = u(c + 1);
    const double curvature = ym - 2.0 * y0 + yp;
    double delta = curvature != 0.0 ? 0.5 * (ym - yp) / curvature : 0.0;
    delta = std::clamp(delta, -1.0, 1.0);

    out.peaks.push_back({out.peaks.size() + 1, s[c].t + delta * series.dt,
                         std::abs(y0 - 0.25 * (ym - yp) * delta)});
    crossed = false;
  }
  if (out.peaks.empty()) {
    throw NoPeaks("no completed oscillation cycle in " +
                  std::to_string(s.back().t) + " s of samples");
  }
  return out;
}

}  // namespace oscc::osc
