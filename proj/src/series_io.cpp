#include <algorithm>
#include <cmath>
#include <ostream>
#include <cstdio>
#include <string>

#include "oscc/oscillator.hpp"

namespace oscc::osc {

namespace {

std::string num(const char* format, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const TimeSeries& series) {
  out << "t,x,v,energy\n";
  for (const auto& s : series.samples) {
    out << num("%.17g", s.t) << ',' << num("%.17g", s.x) << ','
        << num("%.17g", s.v) << ',' << num("%.17g", s.energy) << '\n';
  }
}

void write_svg(std::ostream& out, const TimeSeries& series) {
  constexpr double width = 800;
  constexpr double height = 400;
  constexpr double pad = 40;
  constexpr std::size_t max_points = 4000;

  const auto& s = series.samples;
  double t_end = s.empty() ? 1.0 : s.back().t;
  if (t_end <= 0) t_end = 1.0;
  double x_abs = 0.0;
  for (const auto& p : s) x_abs = std::max(x_abs, std::abs(p.x - series.equilibrium));
  if (x_abs == 0) x_abs = 1.0;

  const auto px = [&](double t) { return pad + (width - 2 * pad) * t / t_end; };
  const auto py = [&](double x) {
    return height / 2 - (height / 2 - pad) * (x - series.equilibrium) / x_abs;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "  <line x1=\"" << pad << "\" y1=\"" << height / 2 << "\" x2=\""
      << width - pad << "\" y2=\"" << height / 2
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad
      << "\" y2=\"" << height - pad << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <text x=\"" << width - pad << "\" y=\"" << height / 2 + 16
      << "\" font-size=\"12\" text-anchor=\"end\">t [s] 0.." << num("%.4g", t_end)
      << "</text>\n";
  out << "  <text x=\"" << pad + 4 << "\" y=\"" << pad - 8
      << "\" font-size=\"12\">x [m] ±" << num("%.4g", x_abs) << "</text>\n";

  out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
  const std::size_t stride = std::max<std::size_t>(1, s.size() / max_points);
  for (std::size_t j = 0; j < s.size(); j += stride) {
    out << num("%.2f", px(s[j].t)) << ',' << num("%.2f", py(s[j].x)) << ' ';
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace oscc::osc
