#include "oscc/equiv.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace oscc::equiv {

const char* to_string(Event e) {
  return e == Event::ConsumeOne ? "ConsumeOne" : "Stop";
}

const char* to_string(Source s) {
  return s == Source::Machine ? "Machine" : "Physics";
}

std::size_t EventTrace::consume_count() const {
  return static_cast<std::size_t>(
      std::count(events.begin(), events.end(), Event::ConsumeOne));
}

std::string Verdict::summary() const {
  const std::string counts = std::to_string(consume_a) + " iterations " +
                             (consume_a == consume_b ? "=" : "!=") + " " +
                             std::to_string(consume_b) + " oscillations";
  if (equal) {
    return "EQUIVALENT: " + counts + (stop_a ? "" : " (no halt within budget)");
  }
  const auto name = [](const std::optional<Event>& e) {
    return e ? std::string(to_string(*e)) : std::string("end of trace");
  };
  return "NOT EQUIVALENT: " + counts + " (first divergence at event " +
         std::to_string(detail->index) + ": machine " + name(detail->expected) +
         ", physics " + name(detail->found) + ")";
}

EventTrace tm_event_trace(const tm::ExecutionTrace& trace) {
  EventTrace out;
  out.source = Source::Machine;
  for (const auto& r : trace.applied_rules) {
    if (r.from == r.to && r.read == tm::Symbol::one() && r.write.is_blank() &&
        r.move == tm::Move::Left) {
      out.events.push_back(Event::ConsumeOne);
    } else if (r.from != r.to && r.read.is_blank() && r.write.is_blank() &&
               r.move == tm::Move::Stay) {
      out.events.push_back(Event::Stop);
    } else {
      throw ForeignRule("rule " + tm::to_string(r) +
                        " does not belong to the oscillator machine");
    }
  }
  const auto first_stop = std::find(out.events.begin(), out.events.end(), Event::Stop);
  if (first_stop != out.events.end() && first_stop + 1 != out.events.end()) {
    throw ForeignRule("trace continues after the stopping rule");
  }
  return out;
}

EventTrace physical_event_trace(const osc::PeakList& peaks, double A0,
                                double gamma0, bool run_complete) {
  EventTrace out;
  out.source = Source::Physics;
  for (const auto& peak : peaks.peaks) {
    if (peak.amplitude / A0 > gamma0) {
      out.events.push_back(Event::ConsumeOne);
    } else {
      out.events.push_back(Event::Stop);
      return out;
    }
  }
  if (run_complete) out.events.push_back(Event::Stop);
  return out;
}

Verdict check_bisimulation(const EventTrace& a, const EventTrace& b) {
  Verdict v;
  v.consume_a = a.consume_count();
  v.consume_b = b.consume_count();
  v.stop_a = a.stopped();
  v.stop_b = b.stopped();
  v.equal = a.events == b.events;
  if (!v.equal) {
    const auto [ia, ib] = std::mismatch(a.events.begin(), a.events.end(),
                                        b.events.begin(), b.events.end());
    Mismatch m;
    m.index = static_cast<std::size_t>(ia - a.events.begin());
    if (ia != a.events.end()) m.expected = *ia;
    if (ib != b.events.end()) m.found = *ib;
    v.detail = m;
  }
  return v;
}

VerificationReport verify(const synth::CompilationResult& compiled,
                          const VerifyOptions& options) {
  VerificationReport report;

  const Count ones = compiled.tape.tape.count_ones();
  const std::uint64_t budget =
      ones.is_finite() ? ones.value() + 2 : options.undamped_cycles;
  report.machine_run = tm::run(compiled.machine, compiled.tape, budget);
  report.machine = tm_event_trace(report.machine_run);

  osc::OscillatorParams detector = compiled.params;
  detector.gamma0 = options.detector_gamma0.value_or(compiled.params.gamma0);
  osc::validate(detector);

  const double T = osc::period(compiled.params);
  const Count cycles = osc::oscillation_count(detector);
  bool run_complete = false;
  if (cycles.is_finite()) {
    const std::uint64_t expected =
        std::max<std::uint64_t>(cycles.value(), ones.is_finite() ? ones.value() : 0);
    report.horizon = static_cast<double>(expected + 2) * T;
    run_complete = true;
  } else {
    report.horizon = (static_cast<double>(options.undamped_cycles) + 0.5) * T;
  }

  osc::SimConfig sim;
  sim.x0 = options.x0;
  sim.v0 = options.v0;
  sim.dt = options.dt;
  sim.t_max = report.horizon;
  sim.equilibrium = options.equilibrium;
  const osc::TimeSeries series = osc::integrate(compiled.params, sim);
  report.peaks = osc::extract_peaks(series);
  report.physics = physical_event_trace(report.peaks, report.peaks.A0,
                                        detector.gamma0, run_complete);
  report.verdict = check_bisimulation(report.machine, report.physics);
  return report;
}

std::vector<VerificationReport> verify_sweep(const lang::Program& program,
                                             const synth::CompileOptions& compile,
                                             const VerifyOptions& options,
                                             std::uint64_t first,
                                             std::uint64_t last) {
  if (first == 0 || last < first) {
    throw Error("sweep range must satisfy 1 <= first <= last");
  }
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerificationReport> reports;
  reports.reserve(last - first + 1);

  for (std::uint64_t batch = first; batch <= last; batch += workers) {
    std::vector<std::future<VerificationReport>> jobs;
    for (std::uint64_t M = batch; M <= last && M < batch + workers; ++M) {
      jobs.push_back(std::async(std::launch::async, [&, M] {
        return verify(synth::compile(lang::with_count(program, M), compile),
                      options);
      }));
    }
    for (auto& job : jobs) reports.push_back(job.get());
  }
  return reports;
}

}  // namespace oscc::equiv
