#include "oscc/synth.hpp"

#include <cstdio>

namespace oscc::synth {

namespace {

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct MatchedMachine {
  tm::HeadState active;
  tm::HeadState rest;
};

// The oscillator machine up to the spelling of its two states:
//   <a,1,a,_,->  and  <a,_,b,_,0>  with a != b.
MatchedMachine match_oscillator_machine(const tm::MachineSpec& machine) {
  const std::set<tm::Symbol> alphabet{tm::Symbol::one(), tm::Symbol::blank()};
  if (machine.states().size() != 2) {
    throw UnsupportedMachine("expected 2 states, machine has " +
                             std::to_string(machine.states().size()));
  }
  if (machine.alphabet() != alphabet) {
    throw UnsupportedMachine("expected the alphabet {1, _}");
  }
  if (machine.rules().size() != 2) {
    throw UnsupportedMachine("expected 2 rules, machine has " +
                             std::to_string(machine.rules().size()));
  }
  const tm::TransitionRule* consume = nullptr;
  const tm::TransitionRule* stop = nullptr;
  for (const auto& r : machine.rules()) {
    if (r.read == tm::Symbol::one() && r.write.is_blank() &&
        r.move == tm::Move::Left && r.from == r.to) {
      consume = &r;
    } else if (r.read.is_blank() && r.write.is_blank() &&
               r.move == tm::Move::Stay && r.from != r.to) {
      stop = &r;
    }
  }
  if (consume == nullptr || stop == nullptr || stop->from != consume->from) {
    throw UnsupportedMachine(
        "rules are not <q1,1,q1,_,-> and <q1,_,q0,_,0> up to state names");
  }
  return {consume->from, stop->to};
}

}  // namespace

std::pair<tm::MachineSpec, tm::MachineConfig> loop_to_tm(
    const lang::LoopPattern& pattern) {
  return {tm::oscillator_machine(),
          tm::unary_tape(Count::finite(pattern.count))};
}

osc::OscillatorParams tm_to_oscillator(const tm::MachineSpec& machine,
                                       const tm::MachineConfig& tape, double m,
                                       double k, double gamma0) {
  const MatchedMachine matched = match_oscillator_machine(machine);
  if (tape.state != matched.active) {
    throw UnsupportedMachine("tape must start in the oscillating state '" +
                             matched.active.token() + "'");
  }

  osc::OscillatorParams params{m, k, 0.0, gamma0};
  const Count ones = tape.tape.count_ones();
  if (ones.is_unbounded()) {
    osc::validate(params);
    return params;
  }
  if (ones.value() == 0) {
    throw EmptyTape("a tape without ones has no finite-friction realisation");
  }
  const auto extent = tape.tape.non_blank_extent();
  const auto width = static_cast<std::uint64_t>(extent->second - extent->first + 1);
  if (width != ones.value() || tape.head != extent->second) {
    throw UnsupportedMachine(
        "tape must be one block of ones with the head on the rightmost");
  }
  params.mu = osc::friction_for_target(
      m, k, gamma0, static_cast<double>(ones.value()) + kCountMargin);
  return params;
}

std::pair<tm::MachineSpec, tm::MachineConfig> oscillator_to_tm(
    const osc::OscillatorParams& params) {
  return {tm::oscillator_machine(), tm::unary_tape(osc::oscillation_count(params))};
}

LagrangianDescription emit_lagrangian(const osc::OscillatorParams& params) {
  LagrangianDescription out;
  out.kinetic_coefficient = 0.5 * params.m;
  out.potential_coefficient = 0.5 * params.k;
  out.dissipation_coefficient = params.mu;
  out.rendered = "L = " + g6(out.kinetic_coefficient) + "·ẋ² − " +
                 g6(out.potential_coefficient) +
                 "·x²  [dissipation μ = " +
                 g6(out.dissipation_coefficient) + "]";
  return out;
}

CompilationResult compile(const lang::Program& program,
                          const CompileOptions& options) {
  lang::LoopPattern pattern = lang::recognize_loop(program, options.overrides);
  auto [machine, tape] = loop_to_tm(pattern);
  osc::OscillatorParams params =
      tm_to_oscillator(machine, tape, options.m, options.k, options.gamma0);
  LagrangianDescription lagrangian = emit_lagrangian(params);

  std::vector<std::string> diagnostics;
  const auto literal = lang::interpret(program, options.overrides);
  if (literal.body_executions != pattern.count) {
    diagnostics.push_back(
        "literal execution enters the loop " +
        std::to_string(literal.body_executions) + " time(s) (guard `" +
        pattern.counter + ">1` after the decrement); the machine and the "
        "oscillator realise " + std::to_string(pattern.count) + " iteration(s)");
  }
  diagnostics.push_back(
      "mu targets f(mu) = " + g6(static_cast<double>(pattern.count) + kCountMargin) +
      "; exact inversion f(mu) = " + std::to_string(pattern.count) +
      " would give mu = " +
      g6(osc::friction_for_count(options.m, options.k, options.gamma0,
                                 pattern.count)) +
      " with cycle " + std::to_string(pattern.count) + " on the threshold");

  CompilationResult result{std::move(pattern), std::move(machine),
                           std::move(tape), params, std::move(lagrangian),
                           std::move(diagnostics)};

  const Count ones = result.tape.tape.count_ones();
  if (ones != Count::finite(result.pattern.count)) {
    throw Error("compile: tape holds " + ones.to_string() + " ones, expected " +
                std::to_string(result.pattern.count));
  }
  const Count cycles = osc::oscillation_count(result.params);
  if (cycles != Count::finite(result.pattern.count)) {
    throw Error("compile: oscillator performs " + cycles.to_string() +
                " cycles, expected " + std::to_string(result.pattern.count));
  }
  return result;
}

CompilationResult compile(std::string_view source,
                          const CompileOptions& options) {
  return compile(lang::parse(source), options);
}

}  // namespace oscc::synth
