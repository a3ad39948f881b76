#include "oscc/tm.hpp"

#include <algorithm>
#include <cctype>

namespace oscc::tm {

namespace {

// Tokens appear inside "|"-separated rows and "<a,b,c,d,e>" rule strings, so
// the separators themselves are reserved.
bool valid_token(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isgraph(c) && c != '|' && c != ',' && c != '<' && c != '>';
  });
}

}  // namespace

Symbol::Symbol(std::string token) : token_(std::move(token)) {
  if (!valid_token(token_)) {
    throw InvalidMachine("invalid symbol token '" + token_ + "'");
  }
}

HeadState::HeadState(std::string token) : token_(std::move(token)) {
  if (!valid_token(token_)) {
    throw InvalidMachine("invalid state token '" + token_ + "'");
  }
}

char move_token(Move move) {
  switch (move) {
    case Move::Left:
      return '-';
    case Move::Right:
      return '+';
    case Move::Stay:
      return '0';
  }
  return '0';
}

Move parse_move(char token) {
  switch (token) {
    case '-':
      return Move::Left;
    case '+':
      return Move::Right;
    case '0':
      return Move::Stay;
    default:
      throw ParseError(std::string("unknown move token '") + token + "'");
  }
}

std::int64_t move_offset(Move move) {
  switch (move) {
    case Move::Left:
      return -1;
    case Move::Right:
      return 1;
    case Move::Stay:
      return 0;
  }
  return 0;
}

MachineSpec::MachineSpec(std::set<HeadState> states, std::set<Symbol> alphabet,
                         std::vector<TransitionRule> rules)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      rules_(std::move(rules)) {
  if (states_.empty()) throw InvalidMachine("machine declares no states");
  if (!alphabet_.contains(Symbol::blank())) {
    throw InvalidMachine("alphabet must contain the blank symbol '_'");
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (!declares(r.from) || !declares(r.to)) {
      throw InvalidMachine("rule " + to_string(r) + " uses an undeclared state");
    }
    if (!declares(r.read) || !declares(r.write)) {
      throw InvalidMachine("rule " + to_string(r) + " uses an undeclared symbol");
    }
    auto [it, inserted] = index_.emplace(std::make_pair(r.from, r.read), i);
    if (!inserted) {
      throw InvalidMachine("rules " + to_string(rules_[it->second]) + " and " +
                           to_string(r) + " share a (state, symbol) pair");
    }
  }
}

const TransitionRule* MachineSpec::find_rule(const HeadState& state,
                                             const Symbol& symbol) const {
  auto it = index_.find({state, symbol});
  return it == index_.end() ? nullptr : &rules_[it->second];
}

Tape Tape::with_ones_up_to(std::int64_t edge) {
  Tape tape;
  tape.ones_edge_ = edge;
  return tape;
}

Symbol Tape::read(std::int64_t cell) const {
  if (auto it = cells_.find(cell); it != cells_.end()) return it->second;
  if (ones_edge_ && cell <= *ones_edge_) return Symbol::one();
  return Symbol::blank();
}

void Tape::write(std::int64_t cell, const Symbol& symbol) {
  // Keep the representation canonical: only cells that differ from their
  // default reading are stored.
  const bool default_one = ones_edge_ && cell <= *ones_edge_;
  const Symbol fallback = default_one ? Symbol::one() : Symbol::blank();
  if (symbol == fallback) {
    cells_.erase(cell);
  } else {
    cells_.insert_or_assign(cell, symbol);
  }
}

Count Tape::count_ones() const {
  if (ones_edge_) return Count::unbounded();
  return Count::finite(static_cast<std::uint64_t>(
      std::count_if(cells_.begin(), cells_.end(),
                    [](const auto& kv) { return kv.second == Symbol::one(); })));
}

std::optional<std::pair<std::int64_t, std::int64_t>> Tape::non_blank_extent()
    const {
  std::optional<std::pair<std::int64_t, std::int64_t>> extent;
  auto include = [&](std::int64_t cell) {
    if (!extent) {
      extent = {cell, cell};
    } else {
      extent->first = std::min(extent->first, cell);
      extent->second = std::max(extent->second, cell);
    }
  };
  for (const auto& [cell, symbol] : cells_) {
    if (!symbol.is_blank()) include(cell);
  }
  if (ones_edge_) include(*ones_edge_);
  return extent;
}

std::optional<MachineConfig> step(const MachineSpec& spec,
                                  const MachineConfig& config) {
  if (!spec.declares(config.state)) {
    throw MalformedConfig("state '" + config.state.token() +
                          "' is not declared by the machine");
  }
  const Symbol read = config.under_head();
  if (!spec.declares(read)) {
    throw MalformedConfig("symbol '" + read.token() + "' at cell " +
                          std::to_string(config.head) +
                          " is not in the machine alphabet");
  }
  const TransitionRule* rule = spec.find_rule(config.state, read);
  if (rule == nullptr) return std::nullopt;

  MachineConfig next = config;
  next.tape.write(config.head, rule->write);
  next.head += move_offset(rule->move);
  next.state = rule->to;
  ++next.step_count;
  return next;
}

ExecutionTrace run(const MachineSpec& spec, MachineConfig initial,
                   std::uint64_t max_steps) {
  if (max_steps == 0) throw Error("run: max_steps must be at least 1");

  ExecutionTrace trace;
  trace.configs.push_back(std::move(initial));
  for (std::uint64_t n = 0;; ++n) {
    const MachineConfig& current = trace.configs.back();
    if (n == max_steps) {
      // Budget spent. Halting is still decided by rule lookup, which does not
      // cost a step.
      const Symbol read = current.under_head();
      if (spec.declares(current.state) && spec.declares(read) &&
          spec.find_rule(current.state, read) == nullptr) {
        trace.halted = true;
        trace.halt_reason = HaltReason::NoRule;
      } else {
        trace.halted = false;
        trace.halt_reason = HaltReason::StepBudgetExhausted;
      }
      return trace;
    }
    std::optional<MachineConfig> next = step(spec, current);
    if (!next) {
      trace.halted = true;
      trace.halt_reason = HaltReason::NoRule;
      return trace;
    }
    trace.applied_rules.push_back(
        *spec.find_rule(current.state, current.under_head()));
    trace.configs.push_back(std::move(*next));
  }
}

MachineSpec oscillator_machine() {
  const HeadState q0("q0");
  const HeadState q1("q1");
  const Symbol one = Symbol::one();
  const Symbol blank = Symbol::blank();
  return MachineSpec({q0, q1}, {one, blank},
                     {
                         {q1, one, q1, blank, Move::Left},
                         {q1, blank, q0, blank, Move::Stay},
                     });
}

MachineConfig unary_tape(Count count) {
  MachineConfig config;
  config.state = HeadState("q1");
  if (count.is_unbounded()) {
    config.tape = Tape::with_ones_up_to(0);
    config.head = 0;
    return config;
  }
  const auto n = static_cast<std::int64_t>(count.value());
  for (std::int64_t cell = 0; cell < n; ++cell) {
    config.tape.write(cell, Symbol::one());
  }
  config.head = n > 0 ? n - 1 : 0;
  return config;
}

}  // namespace oscc::tm
