#pragma once

// Compilation of a counted loop into a damped oscillator:
//   source -> Program -> LoopPattern -> (oscillator machine, unary tape)
//          -> OscillatorParams -> Lagrangian description
// and the reverse direction, oscillator -> (machine, tape).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oscc/error.hpp"
#include "oscc/lang.hpp"
#include "oscc/oscillator.hpp"
#include "oscc/tm.hpp"

namespace oscc::synth {

class UnsupportedMachine : public Error {
 public:
  using Error::Error;
};

class EmptyTape : public Error {
 public:
  using Error::Error;
};

/// mu is chosen so that f(mu) = M + kCountMargin rather than M: at f = M the
/// M-th cycle ends exactly on A_M / A0 = gamma0, which belongs to the rest
/// class. With the margin, cycle M sits above the threshold and cycle M+1
/// below it. Worked example (M = 10, m = 1, k = 100, gamma0 = 0.1): 0.7288.
inline constexpr double kCountMargin = 0.05;

struct LagrangianDescription {
  double kinetic_coefficient;      // m/2 [kg]
  double potential_coefficient;    // k/2 [N/m]
  double dissipation_coefficient;  // mu [N*s/m]
  std::string rendered;
};

struct CompileOptions {
  double m = 1.0;
  double k = 100.0;
  double gamma0 = 0.1;
  lang::Env overrides;  // values for a placeholder count such as M
};

struct CompilationResult {
  lang::LoopPattern pattern;
  tm::MachineSpec machine;
  tm::MachineConfig tape;
  osc::OscillatorParams params;
  LagrangianDescription lagrangian;
  std::vector<std::string> diagnostics;
};

/// The oscillator machine and a tape of pattern.count ones. The loop body
/// contributes nothing: one iteration is one consumed symbol.
std::pair<tm::MachineSpec, tm::MachineConfig> loop_to_tm(
    const lang::LoopPattern& pattern);

/// Friction realising the tape's count of ones. `machine` must be the
/// two-rule oscillator machine up to renaming of its two states and `tape` a
/// unary tape in the active state. An unbounded tape maps to mu = 0.
/// Throws UnsupportedMachine, or EmptyTape for zero ones.
osc::OscillatorParams tm_to_oscillator(const tm::MachineSpec& machine,
                                       const tm::MachineConfig& tape, double m,
                                       double k, double gamma0);

/// The oscillator machine with a tape of oscillation_count(params) ones.
std::pair<tm::MachineSpec, tm::MachineConfig> oscillator_to_tm(
    const osc::OscillatorParams& params);

LagrangianDescription emit_lagrangian(const osc::OscillatorParams& params);

/// parse -> recognize_loop -> loop_to_tm -> tm_to_oscillator ->
/// emit_lagrangian. Both CompilationResult invariants are checked before
/// returning (tape ones == count, oscillation_count(params) == count).
CompilationResult compile(std::string_view source,
                          const CompileOptions& options = {});

/// Same pipeline from an already parsed program.
CompilationResult compile(const lang::Program& program,
                          const CompileOptions& options = {});

}  // namespace oscc::synth
