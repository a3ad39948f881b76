#include "oscc/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oscc/documents.hpp"
#include "oscc/equiv.hpp"
#include "oscc/lang.hpp"
#include "oscc/oscillator.hpp"
#include "oscc/synth.hpp"
#include "oscc/tm.hpp"

namespace oscc::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

lang::Env parse_assignments(const std::vector<std::string>& items) {
  lang::Env env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    std::int64_t value = 0;
    const char* first = item.data() + (eq == std::string::npos ? 0 : eq + 1);
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (eq == std::string::npos || eq == 0 || ec != std::errc() || ptr != last) {
      throw Error("--set expects NAME=INTEGER, got '" + item + "'");
    }
    env[item.substr(0, eq)] = value;
  }
  return env;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool ok = dots != std::string::npos;
  if (ok) {
    auto r1 = std::from_chars(text.data(), text.data() + dots, a);
    auto r2 = std::from_chars(text.data() + dots + 2, text.data() + text.size(), b);
    ok = r1.ec == std::errc() && r1.ptr == text.data() + dots &&
         r2.ec == std::errc() && r2.ptr == text.data() + text.size();
  }
  if (!ok || a == 0 || b < a) {
    throw Error("--sweep expects A..B with 1 <= A <= B, got '" + text + "'");
  }
  return {a, b};
}

struct PhysicalFlags {
  double m = 1.0;
  double k = 100.0;
  double gamma0 = 0.1;
};

void add_physical(CLI::App* cmd, PhysicalFlags& f) {
  cmd->add_option("--m", f.m, "mass [kg]")->capture_default_str();
  cmd->add_option("--k", f.k, "stiffness [N/m]")->capture_default_str();
  cmd->add_option("--gamma0", f.gamma0, "halting threshold on A_i/A0")
      ->capture_default_str();
}

int cmd_compile(const std::string& path, const PhysicalFlags& f,
                const std::vector<std::string>& sets, std::ostream& out) {
  synth::CompileOptions options{f.m, f.k, f.gamma0, parse_assignments(sets)};
  const auto result = synth::compile(read_file(path), options);
  out << doc::to_document(result).dump(2) << '\n';
  return kOk;
}

int cmd_run_tm(std::optional<std::uint64_t> count, bool unbounded,
               std::uint64_t max_steps, const std::string& machine_path,
               std::ostream& out, std::ostream& err) {
  if (count.has_value() == unbounded) {
    throw Error("run-tm needs exactly one of --count or --unbounded");
  }
  const tm::MachineSpec machine = machine_path.empty()
                                      ? tm::oscillator_machine()
                                      : tm::parse_machine(read_file(machine_path));
  const tm::MachineConfig tape =
      tm::unary_tape(unbounded ? Count::unbounded() : Count::finite(*count));
  const tm::ExecutionTrace trace = tm::run(machine, tape, max_steps);
  out << tm::render_trace(trace);
  err << (trace.halted ? "halted (no rule) after "
                       : "step budget exhausted after ")
      << trace.applied_rules.size() << " step(s) in state "
      << trace.final_config().state.token() << '\n';
  return kOk;
}

struct SimulateFlags {
  PhysicalFlags physical;
  double mu = 0.73;
  double x0 = -5.0;
  double v0 = 0.0;
  double dt = 1e-4;
  std::optional<double> t_max;
  std::string out_csv;
  std::string out_svg;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  const osc::OscillatorParams params{f.physical.m, f.physical.k, f.mu,
                                     f.physical.gamma0};
  osc::validate(params);
  const double T = osc::period(params);
  const Count predicted = osc::oscillation_count(params);

  osc::SimConfig sim;
  sim.x0 = f.x0;
  sim.v0 = f.v0;
  sim.dt = f.dt;
  sim.t_max = f.t_max.value_or(
      predicted.is_finite() ? static_cast<double>(predicted.value() + 2) * T
                            : 10.5 * T);
  const osc::TimeSeries series = osc::integrate(params, sim);

  {
    std::ofstream csv(f.out_csv);
    if (!csv) throw Error("cannot write '" + f.out_csv + "'");
    osc::write_csv(csv, series);
  }
  if (!f.out_svg.empty()) {
    std::ofstream svg(f.out_svg);
    if (!svg) throw Error("cannot write '" + f.out_svg + "'");
    osc::write_svg(svg, series);
  }

  const osc::PeakList peaks = osc::extract_peaks(series);
  const auto events =
      equiv::physical_event_trace(peaks, peaks.A0, params.gamma0, false);
  doc::json summary = {
      {"params", doc::to_document(params)},
      {"period", T},
      {"samples", series.samples.size()},
      {"t_max", series.samples.back().t},
      {"predicted_oscillations", doc::to_document(predicted)},
      {"peaks", doc::to_document(peaks)["peaks"]},
      {"A0", peaks.A0},
  };
  if (events.stopped()) {
    summary["qualifying_cycles"] = events.consume_count();
  } else {
    summary["qualifying_cycles"] = "unbounded (no threshold crossing within horizon)";
  }
  out << summary.dump(2) << '\n';
  return kOk;
}

struct VerifyFlags {
  PhysicalFlags physical;
  double dt = 1e-4;
  double x0 = -5.0;
  std::optional<double> detector_gamma0;
  std::vector<std::string> sets;
  std::string sweep;
  bool json = false;
};

int cmd_verify(const std::string& path, const VerifyFlags& f, std::ostream& out) {
  const synth::CompileOptions compile{f.physical.m, f.physical.k,
                                      f.physical.gamma0, parse_assignments(f.sets)};
  equiv::VerifyOptions options;
  options.dt = f.dt;
  options.x0 = f.x0;
  options.detector_gamma0 = f.detector_gamma0;

  const lang::Program program = lang::parse(read_file(path));
  if (!f.sweep.empty()) {
    const auto [first, last] = parse_range(f.sweep);
    const auto reports = equiv::verify_sweep(program, compile, options, first, last);
    bool all_equal = true;
    doc::json list = doc::json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& v = reports[i].verdict;
      all_equal = all_equal && v.equal;
      if (f.json) {
        auto d = doc::to_document(v);
        d["count"] = first + i;
        list.push_back(std::move(d));
      } else {
        out << "M=" << first + i << ": " << v.summary() << '\n';
      }
    }
    if (f.json) out << list.dump(2) << '\n';
    return all_equal ? kOk : kNotEquivalent;
  }

  const auto compiled = synth::compile(program, compile);
  const auto report = equiv::verify(compiled, options);
  if (f.json) {
    out << doc::json{{"verdict", doc::to_document(report.verdict)},
                     {"machine", doc::to_document(report.machine)},
                     {"physics", doc::to_document(report.physics)},
                     {"params", doc::to_document(compiled.params)},
                     {"horizon", report.horizon}}
               .dump(2)
        << '\n';
  } else {
    out << report.verdict.summary() << '\n';
  }
  return report.verdict.equal ? kOk : kNotEquivalent;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"oscc: compile counted loops into damped oscillators and verify them"};
  app.require_subcommand(1);

  std::string compile_path;
  PhysicalFlags compile_flags;
  std::vector<std::string> compile_sets;
  auto* compile = app.add_subcommand("compile", "lower a counted loop to oscillator parameters");
  compile->add_option("file", compile_path, "source file")->required();
  add_physical(compile, compile_flags);
  compile->add_option("--set", compile_sets, "value for a placeholder, NAME=INTEGER");

  std::optional<std::uint64_t> count;
  bool unbounded = false;
  std::uint64_t max_steps = 1000;
  std::string machine_path;
  auto* run_tm = app.add_subcommand("run-tm", "run the oscillator machine on a unary tape");
  run_tm->add_option("--count", count, "number of ones on the tape");
  run_tm->add_flag("--unbounded", unbounded, "unbounded string of ones");
  run_tm->add_option("--max-steps", max_steps, "step budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  run_tm->add_option("--machine", machine_path, "machine document instead of the oscillator machine");

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "integrate the oscillator and extract cycles");
  add_physical(simulate, sim.physical);
  simulate->add_option("--mu", sim.mu, "friction [N*s/m]")->capture_default_str();
  simulate->add_option("--x0", sim.x0, "initial position [m]")->capture_default_str();
  simulate->add_option("--v0", sim.v0, "initial velocity [m/s]")->capture_default_str();
  simulate->add_option("--dt", sim.dt, "time step [s]")->capture_default_str();
  simulate->add_option("--t-max", sim.t_max, "horizon [s] (default: predicted cycles + 2 periods)");
  simulate->add_option("--out-csv", sim.out_csv, "trajectory CSV")->required();
  simulate->add_option("--out-svg", sim.out_svg, "trajectory SVG");

  std::string verify_path;
  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "compile, run, simulate and compare event traces");
  verify->add_option("file", verify_path, "source file")->required();
  add_physical(verify, vf.physical);
  verify->add_option("--dt", vf.dt, "time step [s]")->capture_default_str();
  verify->add_option("--x0", vf.x0, "initial position [m]")->capture_default_str();
  verify->add_option("--detector-gamma0", vf.detector_gamma0,
                     "threshold used to classify simulated cycles (default: --gamma0)");
  verify->add_option("--set", vf.sets, "value for a placeholder, NAME=INTEGER");
  verify->add_option("--sweep", vf.sweep, "verify every count in A..B");
  verify->add_flag("--json", vf.json, "JSON document instead of summary lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*compile) return cmd_compile(compile_path, compile_flags, compile_sets, out);
    if (*run_tm) return cmd_run_tm(count, unbounded, max_steps, machine_path, out, err);
    if (*simulate) return cmd_simulate(sim, out);
    if (*verify) return cmd_verify(verify_path, vf, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const doc::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace oscc::cli
