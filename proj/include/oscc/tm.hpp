#pragma once

// Deterministic single-tape Turing machines: representation, stepping,
// execution and text rendering of execution traces.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oscc/count.hpp"
#include "oscc/error.hpp"

namespace oscc::tm {

/// Thrown when a configuration references a state or symbol the machine does
/// not declare.
class MalformedConfig : public Error {
 public:
  using Error::Error;
};

/// Thrown when a machine definition is inconsistent (undeclared references,
/// two rules for the same (state, symbol) pair, bad tokens).
class InvalidMachine : public Error {
 public:
  using Error::Error;
};

/// Thrown by the text parsers (rule strings, machine documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A tape symbol, identified by a short printable token. "_" is the blank.
class Symbol {
 public:
  explicit Symbol(std::string token);

  static Symbol one() { return Symbol("1"); }
  static Symbol blank() { return Symbol("_"); }

  const std::string& token() const { return token_; }
  bool is_blank() const { return token_ == "_"; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string token_;
};

/// A head state such as "q0" or "q1". Compared by token.
class HeadState {
 public:
  explicit HeadState(std::string token);

  const std::string& token() const { return token_; }

  friend auto operator<=>(const HeadState&, const HeadState&) = default;

 private:
  std::string token_;
};

enum class Move { Left, Right, Stay };

/// "-" for Left, "+" for Right, "0" for Stay.
char move_token(Move move);
Move parse_move(char token);
std::int64_t move_offset(Move move);

/// One instruction <qi,si,qf,sf,r>.
struct TransitionRule {
  HeadState from;
  Symbol read;
  HeadState to;
  Symbol write;
  Move move;

  friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

/// Renders as "<q1,1,q1,_,->".
std::string to_string(const TransitionRule& rule);

/// Inverse of to_string. Surrounding whitespace is ignored.
TransitionRule parse_rule(std::string_view text);

/// States, alphabet and rules of a deterministic machine. A configuration for
/// which no rule matches is a halting configuration.
class MachineSpec {
 public:
  /// Throws InvalidMachine unless every rule references declared states and
  /// symbols, the alphabet contains the blank and no two rules share (qi, si).
  MachineSpec(std::set<HeadState> states, std::set<Symbol> alphabet,
              std::vector<TransitionRule> rules);

  const std::set<HeadState>& states() const { return states_; }
  const std::set<Symbol>& alphabet() const { return alphabet_; }
  const std::vector<TransitionRule>& rules() const { return rules_; }

  bool declares(const HeadState& state) const { return states_.contains(state); }
  bool declares(const Symbol& symbol) const { return alphabet_.contains(symbol); }

  /// The rule for (state, symbol), or nullptr when none applies.
  const TransitionRule* find_rule(const HeadState& state,
                                  const Symbol& symbol) const;

 private:
  std::set<HeadState> states_;
  std::set<Symbol> alphabet_;
  std::vector<TransitionRule> rules_;
  std::map<std::pair<HeadState, Symbol>, std::size_t> index_;
};

/// Sparse two-way infinite tape. Unwritten cells read Blank, except that a
/// tape may carry a "ones edge": every unwritten cell at or left of the edge
/// reads One. That models the unbounded string of ones lazily.
class Tape {
 public:
  Tape() = default;

  static Tape with_ones_up_to(std::int64_t edge);

  Symbol read(std::int64_t cell) const;
  void write(std::int64_t cell, const Symbol& symbol);

  bool has_unbounded_ones() const { return ones_edge_.has_value(); }
  std::optional<std::int64_t> ones_edge() const { return ones_edge_; }

  /// Number of One cells. Unbounded for a tape with a ones edge.
  Count count_ones() const;

  /// [min, max] over explicitly written non-blank cells and the ones edge.
  /// nullopt for an all-blank tape.
  std::optional<std::pair<std::int64_t, std::int64_t>> non_blank_extent() const;

  friend bool operator==(const Tape&, const Tape&) = default;

 private:
  std::map<std::int64_t, Symbol> cells_;
  std::optional<std::int64_t> ones_edge_;
};

struct MachineConfig {
  Tape tape;
  std::int64_t head = 0;
  HeadState state{"q1"};
  std::uint64_t step_count = 0;

  Symbol under_head() const { return tape.read(head); }

  friend bool operator==(const MachineConfig&, const MachineConfig&) = default;
};

enum class HaltReason { NoRule, StepBudgetExhausted };

struct ExecutionTrace {
  std::vector<MachineConfig> configs;
  std::vector<TransitionRule> applied_rules;
  bool halted = false;
  HaltReason halt_reason = HaltReason::StepBudgetExhausted;

  const MachineConfig& final_config() const { return configs.back(); }
};

/// Applies the matching rule, or returns nullopt (halt) when none matches.
/// Throws MalformedConfig if the state or the symbol under the head is not
/// declared by `spec`.
std::optional<MachineConfig> step(const MachineSpec& spec,
                                  const MachineConfig& config);

/// Steps until halt or until `max_steps` rules have been applied. Reaching the
/// budget in a configuration with no applicable rule still counts as NoRule.
ExecutionTrace run(const MachineSpec& spec, MachineConfig initial,
                   std::uint64_t max_steps);

/// Q = {q0, q1}, alphabet {1, _}, rules <q1,1,q1,_,-> and <q1,_,q0,_,0>.
MachineSpec oscillator_machine();

/// `count` consecutive ones in cells 0..count-1 with the head on the
/// rightmost one (cell 0 when count is zero) in state q1. An unbounded count
/// fills every cell at or left of 0 with ones.
MachineConfig unary_tape(Count count);

/// One line per configuration in the fixed-width "_|1|q1|1|_ <q1,1,q1,_,->"
/// layout. The cell window spans every head position and non-blank cell the
/// trace reaches, with one blank of context on each side.
std::string render_trace(const ExecutionTrace& trace);

/// Key/value document:
///   states: q0 q1
///   alphabet: 1 _
///   rule: <q1,1,q1,_,->
std::string to_text(const MachineSpec& spec);
MachineSpec parse_machine(std::string_view text);

}  // namespace oscc::tm
