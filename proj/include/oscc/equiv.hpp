#pragma once

// Symbolic event traces lifted from machine runs and from simulated
// trajectories, and their comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oscc/error.hpp"
#include "oscc/oscillator.hpp"
#include "oscc/synth.hpp"
#include "oscc/tm.hpp"

namespace oscc::equiv {

/// The trace contains a rule that is neither the consuming nor the stopping
/// rule of the oscillator machine.
class ForeignRule : public Error {
 public:
  using Error::Error;
};

enum class Event { ConsumeOne, Stop };
enum class Source { Machine, Physics };

const char* to_string(Event e);
const char* to_string(Source s);

/// ConsumeOne* optionally followed by a single Stop.
struct EventTrace {
  std::vector<Event> events;
  Source source = Source::Machine;

  std::size_t consume_count() const;
  bool stopped() const { return !events.empty() && events.back() == Event::Stop; }
};

struct Mismatch {
  std::size_t index;              // first divergent position
  std::optional<Event> expected;  // event of the first trace, if any
  std::optional<Event> found;     // event of the second trace, if any
};

struct Verdict {
  bool equal = false;
  std::size_t consume_a = 0;
  std::size_t consume_b = 0;
  bool stop_a = false;
  bool stop_b = false;
  std::optional<Mismatch> detail;  // set iff !equal

  /// "EQUIVALENT: 10 iterations = 10 oscillations" or a NOT EQUIVALENT line
  /// naming the first divergence. Reads the first trace as the machine.
  std::string summary() const;
};

/// <q,1,q,_,-> emits ConsumeOne, <q,_,q',_,0> emits Stop. A run that ran out
/// of budget ends without Stop. Throws ForeignRule for any other rule.
EventTrace tm_event_trace(const tm::ExecutionTrace& trace);

/// Cycle by cycle: ConsumeOne while A_i / A0 > gamma0, then Stop at the first
/// cycle with A_i / A0 <= gamma0. If the peaks run out above threshold, Stop
/// is emitted only when `run_complete` is set.
EventTrace physical_event_trace(const osc::PeakList& peaks, double A0,
                                double gamma0, bool run_complete);

Verdict check_bisimulation(const EventTrace& a, const EventTrace& b);

struct VerifyOptions {
  double x0 = -5.0;
  double v0 = 0.0;
  double dt = 1e-4;
  double equilibrium = 0.0;
  /// Threshold used to classify simulated cycles. Defaults to the compiled
  /// gamma0; setting it differently models a detector that disagrees with the
  /// compiler.
  std::optional<double> detector_gamma0;
  /// Budget in cycles (and machine steps) for the undamped, non-halting case.
  std::uint64_t undamped_cycles = 10;
};

struct VerificationReport {
  tm::ExecutionTrace machine_run;
  osc::PeakList peaks;
  EventTrace machine;
  EventTrace physics;
  Verdict verdict;
  double horizon = 0.0;  // simulated time [s]
};

/// Runs the compiled machine on its tape, simulates the compiled oscillator
/// for (cycles + 2) periods and compares the two event traces.
VerificationReport verify(const synth::CompilationResult& compiled,
                          const VerifyOptions& options = {});

/// verify() for every count in [first, last], substituted into the program's
/// counter initialisation. Instances run concurrently; results are ordered by
/// count.
std::vector<VerificationReport> verify_sweep(const lang::Program& program,
                                             const synth::CompileOptions& compile,
                                             const VerifyOptions& options,
                                             std::uint64_t first,
                                             std::uint64_t last);

}  // namespace oscc::equiv
