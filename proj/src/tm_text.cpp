#include <algorithm>
#include <sstream>

#include "oscc/tm.hpp"

namespace oscc::tm {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) {
    return c != ' ' && c != '\t' && c != '\r' && c != '\n';
  };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

}  // namespace

std::string to_string(const TransitionRule& rule) {
  std::string out = "<";
  out += rule.from.token();
  out += ',';
  out += rule.read.token();
  out += ',';
  out += rule.to.token();
  out += ',';
  out += rule.write.token();
  out += ',';
  out += move_token(rule.move);
  out += '>';
  return out;
}

TransitionRule parse_rule(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '<' || body.back() != '>') {
    throw ParseError("rule must be written as <qi,si,qf,sf,r>: '" +
                     std::string(text) + "'");
  }
  std::vector<std::string> fields;
  std::string_view inner = body.substr(1, body.size() - 2);
  for (;;) {
    const auto comma = inner.find(',');
    fields.emplace_back(trim(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (fields.size() != 5) {
    throw ParseError("rule needs 5 fields, got " + std::to_string(fields.size()) +
                     ": '" + std::string(text) + "'");
  }
  if (fields[4].size() != 1) {
    throw ParseError("move must be one of '-', '+', '0': '" + fields[4] + "'");
  }
  try {
    return TransitionRule{HeadState(fields[0]), Symbol(fields[1]),
                          HeadState(fields[2]), Symbol(fields[3]),
                          parse_move(fields[4][0])};
  } catch (const InvalidMachine& e) {
    throw ParseError(e.what());
  }
}

std::string render_trace(const ExecutionTrace& trace) {
  if (trace.configs.empty()) return {};

  std::int64_t lo = trace.configs.front().head;
  std::int64_t hi = lo;
  for (const auto& config : trace.configs) {
    lo = std::min(lo, config.head);
    hi = std::max(hi, config.head);
    if (auto extent = config.tape.non_blank_extent()) {
      lo = std::min(lo, extent->first);
      hi = std::max(hi, extent->second);
    }
  }
  // one blank of context on either side
  --lo;
  ++hi;

  std::string out;
  for (std::size_t row = 0; row < trace.configs.size(); ++row) {
    const MachineConfig& config = trace.configs[row];
    std::string line;
    for (std::int64_t cell = lo; cell <= hi; ++cell) {
      if (cell != lo) line += '|';
      if (cell == config.head) {
        line += config.state.token();
        line += '|';
      }
      line += config.tape.read(cell).token();
    }
    if (row < trace.applied_rules.size()) {
      line += ' ';
      line += to_string(trace.applied_rules[row]);
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string to_text(const MachineSpec& spec) {
  std::string out = "states:";
  for (const auto& q : spec.states()) out += " " + q.token();
  out += "\nalphabet:";
  for (const auto& s : spec.alphabet()) out += " " + s.token();
  out += "\nblank: _\n";
  for (const auto& r : spec.rules()) out += "rule: " + to_string(r) + "\n";
  return out;
}

MachineSpec parse_machine(std::string_view text) {
  std::set<HeadState> states;
  std::set<Symbol> alphabet;
  std::vector<TransitionRule> rules;
  bool saw_states = false;
  bool saw_alphabet = false;

  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key: value'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    try {
      if (key == "states") {
        for (auto& w : split_words(value)) states.emplace(std::move(w));
        saw_states = true;
      } else if (key == "alphabet") {
        for (auto& w : split_words(value)) alphabet.emplace(std::move(w));
        saw_alphabet = true;
      } else if (key == "blank") {
        if (value != "_") {
          throw ParseError("line " + std::to_string(line_no) +
                           ": the blank symbol is always '_'");
        }
      } else if (key == "rule") {
        rules.push_back(parse_rule(value));
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                         std::string(key) + "'");
      }
    } catch (const InvalidMachine& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!saw_states) throw ParseError("missing 'states:' entry");
  if (!saw_alphabet) throw ParseError("missing 'alphabet:' entry");
  return MachineSpec(std::move(states), std::move(alphabet), std::move(rules));
}

}  // namespace oscc::tm
