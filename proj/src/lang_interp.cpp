#include "oscc/lang.hpp"

namespace oscc::lang {

namespace {

std::int64_t lookup(const Env& env, const std::string& name,
                    std::uint64_t line_no) {
  auto it = env.find(name);
  if (it == env.end()) {
    throw UndefinedVariable("line " + std::to_string(line_no) +
                            ": variable '" + name + "' read before assignment");
  }
  return it->second;
}

std::int64_t eval(const Expr& expr, const Env& env, std::uint64_t line_no) {
  if (const auto* lit = std::get_if<Literal>(&expr)) return lit->value;
  if (const auto* ref = std::get_if<VarRef>(&expr)) {
    return lookup(env, ref->name, line_no);
  }
  const auto& m = std::get<VarMinus>(expr);
  return lookup(env, m.name, line_no) - m.literal;
}

}  // namespace

InterpretResult interpret(const Program& program, const Env& overrides,
                          std::uint64_t step_budget) {
  const auto& lines = program.lines;

  std::optional<std::size_t> loop_head;
  for (std::size_t i = 0; i < lines.size() && !loop_head; ++i) {
    if (const auto* g = std::get_if<IfGoto>(&lines[i].stmt);
        g != nullptr && g->target <= lines[i].number) {
      loop_head = program.index_of(g->target);
    }
  }

  InterpretResult result;
  result.final_env = overrides;
  Env& env = result.final_env;

  std::size_t pc = 0;
  while (pc < lines.size()) {
    if (result.steps == step_budget) {
      throw StepBudgetExhausted("no termination within " +
                                std::to_string(step_budget) + " statements");
    }
    ++result.steps;
    if (loop_head && pc == *loop_head) ++result.body_executions;

    const Line& l = lines[pc];
    if (const auto* a = std::get_if<Assign>(&l.stmt)) {
      env[a->var] = eval(a->expr, env, l.number);
    } else if (const auto* g = std::get_if<IfGoto>(&l.stmt)) {
      if (lookup(env, g->var, l.number) > g->literal) {
        const auto target = program.index_of(g->target);
        if (!target) throw DanglingGoto(l.number, g->target);
        pc = *target;
        continue;
      }
    } else if (std::holds_alternative<End>(l.stmt)) {
      break;
    }
    ++pc;
  }
  return result;
}

}  // namespace oscc::lang
