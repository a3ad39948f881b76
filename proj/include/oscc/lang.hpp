#pragma once

// A line-numbered BASIC-like loop language:
//
//   10 t := M
//   20 t := t-1
//   30 //do the work
//   40 if t>1 goto 20
//   50 end
//
// Statements: `<var> := <expr>`, `if <var>><int> goto <int>`, `// text`,
// `end`. Expressions: `<int>`, `<var>`, `<var>-<int>`. Keywords are
// case-insensitive; whitespace between tokens is free.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oscc/error.hpp"

namespace oscc::lang {

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class DuplicateLineNumber : public Error {
 public:
  explicit DuplicateLineNumber(std::uint64_t line_no);
  std::uint64_t line_no() const { return line_no_; }

 private:
  std::uint64_t line_no_;
};

class DanglingGoto : public Error {
 public:
  DanglingGoto(std::uint64_t line_no, std::uint64_t target);
  std::uint64_t line_no() const { return line_no_; }
  std::uint64_t target() const { return target_; }

 private:
  std::uint64_t line_no_;
  std::uint64_t target_;
};

class NotACountedLoop : public Error {
 public:
  /// `line_no` is the first line that deviates from the counted-loop shape,
  /// absent when the program ends early.
  NotACountedLoop(std::optional<std::uint64_t> line_no, const std::string& why);
  std::optional<std::uint64_t> line_no() const { return line_no_; }

 private:
  std::optional<std::uint64_t> line_no_;
};

class StepBudgetExhausted : public Error {
 public:
  using Error::Error;
};

class UndefinedVariable : public Error {
 public:
  using Error::Error;
};

struct Literal {
  std::int64_t value;
  friend bool operator==(const Literal&, const Literal&) = default;
};
struct VarRef {
  std::string name;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};
struct VarMinus {
  std::string name;
  std::int64_t literal;
  friend bool operator==(const VarMinus&, const VarMinus&) = default;
};
using Expr = std::variant<Literal, VarRef, VarMinus>;

struct Assign {
  std::string var;
  Expr expr;
  friend bool operator==(const Assign&, const Assign&) = default;
};
/// `if var > literal goto target`; ">" is the only comparator.
struct IfGoto {
  std::string var;
  std::int64_t literal;
  std::uint64_t target;
  friend bool operator==(const IfGoto&, const IfGoto&) = default;
};
struct Comment {
  std::string text;
  friend bool operator==(const Comment&, const Comment&) = default;
};
struct End {
  friend bool operator==(const End&, const End&) = default;
};
using Statement = std::variant<Assign, IfGoto, Comment, End>;

struct Line {
  std::uint64_t number;
  Statement stmt;
  friend bool operator==(const Line&, const Line&) = default;
};

struct Program {
  std::vector<Line> lines;  // strictly increasing line numbers

  /// Position of line `number` in `lines`, if present.
  std::optional<std::size_t> index_of(std::uint64_t number) const;

  friend bool operator==(const Program&, const Program&) = default;
};

using Env = std::map<std::string, std::int64_t>;

/// Throws SyntaxError (1-based source line and column), DuplicateLineNumber or
/// DanglingGoto. Blank lines are skipped.
Program parse(std::string_view source);

/// Canonical source text; parse(to_source(p)) == p.
std::string to_source(const Program& program);

std::string to_string(const Expr& expr);
std::string to_string(const Statement& stmt);

struct LoopPattern {
  std::string counter;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> body_lines;

  friend bool operator==(const LoopPattern&, const LoopPattern&) = default;
};

/// Matches init / decrement / body / `if v>1 goto <decrement>` / end by
/// structure, not by line numbers. A placeholder count (`t := M`) is resolved
/// from `overrides`. Throws NotACountedLoop.
LoopPattern recognize_loop(const Program& program, const Env& overrides = {});

/// Replaces the counter initialisation of a counted loop by `t := count`.
Program with_count(const Program& program, std::uint64_t count);

struct InterpretResult {
  /// Entries into the loop head, i.e. the target of the first backward goto.
  /// Zero for programs without a backward goto.
  std::uint64_t body_executions = 0;
  Env final_env;
  std::uint64_t steps = 0;
};

/// Literal execution in line order. Throws StepBudgetExhausted after
/// `step_budget` statements and UndefinedVariable on reads of unset names.
InterpretResult interpret(const Program& program, const Env& overrides = {},
                          std::uint64_t step_budget = 100'000'000);

}  // namespace oscc::lang
