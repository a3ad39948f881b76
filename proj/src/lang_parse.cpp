#include <algorithm>
#include <cctype>
#include <charconv>

#include "oscc/lang.hpp"

namespace oscc::lang {

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

DuplicateLineNumber::DuplicateLineNumber(std::uint64_t line_no)
    : Error("duplicate line number " + std::to_string(line_no)),
      line_no_(line_no) {}

DanglingGoto::DanglingGoto(std::uint64_t line_no, std::uint64_t target)
    : Error("line " + std::to_string(line_no) + ": goto " +
            std::to_string(target) + " names no existing line"),
      line_no_(line_no),
      target_(target) {}

NotACountedLoop::NotACountedLoop(std::optional<std::uint64_t> line_no,
                                 const std::string& why)
    : Error(line_no ? "not a counted loop at line " + std::to_string(*line_no) +
                          ": " + why
                    : "not a counted loop: " + why),
      line_no_(line_no) {}

std::optional<std::size_t> Program::index_of(std::uint64_t number) const {
  auto it = std::lower_bound(
      lines.begin(), lines.end(), number,
      [](const Line& l, std::uint64_t n) { return l.number < n; });
  if (it == lines.end() || it->number != number) return std::nullopt;
  return static_cast<std::size_t>(it - lines.begin());
}

namespace {

bool ieq(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

bool is_keyword(std::string_view word) {
  return ieq(word, "if") || ieq(word, "goto") || ieq(word, "end");
}

// Tokenizer over a single source line with 1-based columns.
class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  std::string_view rest() const { return text_.substr(pos_); }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, column(), message);
  }
  [[noreturn]] void fail_at(int col, const std::string& message) const {
    throw SyntaxError(line_, col, message);
  }

  bool peek_char(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool peek_str(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }
  void expect(std::string_view s) {
    if (!peek_str(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  void skip(std::size_t n) { pos_ += n; }

  bool peek_identifier() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_');
  }
  std::string identifier() {
    if (!peek_identifier()) fail("expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string variable() {
    const int col = (skip_space(), column());
    std::string name = identifier();
    if (is_keyword(name)) {
      fail_at(col, "keyword '" + name + "' used as a variable");
    }
    return name;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  template <typename Int>
  Int integer() {
    if (!peek_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    Int value{};
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw SyntaxError(line_, static_cast<int>(start) + 1,
                        "integer out of range");
    }
    return value;
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

Expr parse_expr(Cursor& c) {
  if (c.peek_digit()) return Literal{c.integer<std::int64_t>()};
  std::string name = c.variable();
  if (c.peek_char('-')) {
    c.skip(1);
    return VarMinus{std::move(name), c.integer<std::int64_t>()};
  }
  return VarRef{std::move(name)};
}

Statement parse_statement(Cursor& c) {
  if (c.peek_str("//")) {
    c.skip(2);
    std::string text(c.rest());
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
      text.pop_back();
    }
    c.skip(c.rest().size());
    return Comment{std::move(text)};
  }
  if (!c.peek_identifier()) c.fail("expected a statement");

  c.skip_space();
  const int word_col = c.column();
  std::string word = c.identifier();
  if (ieq(word, "end")) return End{};
  if (ieq(word, "if")) {
    IfGoto stmt;
    stmt.var = c.variable();
    if (!c.peek_char('>')) c.fail("expected '>' (the only comparator)");
    c.skip(1);
    stmt.literal = c.integer<std::int64_t>();
    c.skip_space();
    const int goto_col = c.column();
    if (!c.peek_identifier() || !ieq(c.identifier(), "goto")) {
      c.fail_at(goto_col, "expected 'goto'");
    }
    stmt.target = c.integer<std::uint64_t>();
    return stmt;
  }
  if (is_keyword(word)) {
    c.fail_at(word_col, "unexpected keyword '" + word + "'");
  }
  c.expect(":=");
  return Assign{std::move(word), parse_expr(c)};
}

}  // namespace

Program parse(std::string_view source) {
  Program program;
  int line = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t stop = source.find('\n', start);
    if (stop == std::string_view::npos) stop = source.size();
    std::string_view text = source.substr(start, stop - start);
    start = stop + 1;
    ++line;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

    Cursor c(text, line);
    if (c.at_end()) continue;
    for (unsigned char ch : text) {
      if (ch >= 0x80) c.fail("non-ASCII character in source");
    }
    const auto number = c.integer<std::uint64_t>();
    if (number == 0) c.fail("line numbers start at 1");
    Statement stmt = parse_statement(c);
    if (!c.at_end()) c.fail("unexpected trailing text '" + std::string(c.rest()) + "'");

    if (!program.lines.empty()) {
      const std::uint64_t prev = program.lines.back().number;
      if (number == prev) throw DuplicateLineNumber(number);
      if (number < prev) {
        throw SyntaxError(line, 1,
                          "line " + std::to_string(number) + " follows line " +
                              std::to_string(prev) +
                              "; line numbers must increase");
      }
      if (std::holds_alternative<End>(program.lines.back().stmt)) {
        throw SyntaxError(line, 1, "'end' must be the last statement");
      }
    }
    program.lines.push_back({number, std::move(stmt)});
  }
  if (program.lines.empty()) throw SyntaxError(1, 1, "empty program");

  for (const auto& l : program.lines) {
    if (const auto* g = std::get_if<IfGoto>(&l.stmt)) {
      if (!program.index_of(g->target)) throw DanglingGoto(l.number, g->target);
    }
  }
  return program;
}

std::string to_string(const Expr& expr) {
  return std::visit(
      [](const auto& e) -> std::string {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, Literal>) {
          return std::to_string(e.value);
        } else if constexpr (std::is_same_v<E, VarRef>) {
          return e.name;
        } else {
          return e.name + "-" + std::to_string(e.literal);
        }
      },
      expr);
}

std::string to_string(const Statement& stmt) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Assign>) {
          return s.var + " := " + to_string(s.expr);
        } else if constexpr (std::is_same_v<S, IfGoto>) {
          return "if " + s.var + ">" + std::to_string(s.literal) + " goto " +
                 std::to_string(s.target);
        } else if constexpr (std::is_same_v<S, Comment>) {
          return "//" + s.text;
        } else {
          return "end";
        }
      },
      stmt);
}

std::string to_source(const Program& program) {
  std::string out;
  for (const auto& l : program.lines) {
    out += std::to_string(l.number) + " " + to_string(l.stmt) + "\n";
  }
  return out;
}

namespace {

bool mentions(const Expr& expr, const std::string& var) {
  if (const auto* r = std::get_if<VarRef>(&expr)) return r->name == var;
  if (const auto* m = std::get_if<VarMinus>(&expr)) return m->name == var;
  return false;
}

}  // namespace

LoopPattern recognize_loop(const Program& program, const Env& overrides) {
  const auto& lines = program.lines;
  const auto n = lines.size();
  if (n == 0) throw NotACountedLoop(std::nullopt, "empty program");

  const auto* init = std::get_if<Assign>(&lines[0].stmt);
  if (init == nullptr) {
    throw NotACountedLoop(lines[0].number, "expected the counter initialisation `v := M`");
  }
  LoopPattern pattern;
  pattern.counter = init->var;
  std::int64_t count = 0;
  if (const auto* lit = std::get_if<Literal>(&init->expr)) {
    count = lit->value;
  } else if (const auto* ref = std::get_if<VarRef>(&init->expr);
             ref != nullptr && ref->name != init->var) {
    auto it = overrides.find(ref->name);
    if (it == overrides.end()) {
      throw NotACountedLoop(lines[0].number,
                            "count placeholder '" + ref->name + "' has no value");
    }
    count = it->second;
  } else {
    throw NotACountedLoop(lines[0].number,
                          "counter must start from an integer or a placeholder");
  }
  if (count < 1) {
    throw NotACountedLoop(lines[0].number,
                          "count must be >= 1, got " + std::to_string(count));
  }
  pattern.count = static_cast<std::uint64_t>(count);
  const std::string& v = pattern.counter;

  if (n < 2) throw NotACountedLoop(std::nullopt, "missing the decrement `v := v-1`");
  const auto* dec = std::get_if<Assign>(&lines[1].stmt);
  if (dec == nullptr || dec->var != v || !(dec->expr == Expr{VarMinus{v, 1}})) {
    throw NotACountedLoop(lines[1].number, "expected `" + v + " := " + v + "-1`");
  }

  const auto is_body = [&](const Statement& stmt) {
    if (std::holds_alternative<Comment>(stmt)) return true;
    const auto* a = std::get_if<Assign>(&stmt);
    return a != nullptr && a->var != v && !mentions(a->expr, v);
  };
  std::size_t i = 2;
  for (; i < n && is_body(lines[i].stmt); ++i) pattern.body_lines.push_back(lines[i].number);

  if (i == n) throw NotACountedLoop(std::nullopt, "missing the loop test `if v>1 goto`");
  const auto* g = std::get_if<IfGoto>(&lines[i].stmt);
  if (g == nullptr || g->var != v || g->literal != 1 || g->target != lines[1].number) {
    throw NotACountedLoop(lines[i].number, "expected `if " + v + ">1 goto " +
                                               std::to_string(lines[1].number) + "`");
  }
  if (++i == n) throw NotACountedLoop(std::nullopt, "missing `end`");
  if (!std::holds_alternative<End>(lines[i].stmt) || i + 1 != n) {
    throw NotACountedLoop(lines[i].number, "expected `end`");
  }
  return pattern;
}

Program with_count(const Program& program, std::uint64_t count) {
  Program out = program;
  if (out.lines.empty() || !std::holds_alternative<Assign>(out.lines[0].stmt)) {
    throw NotACountedLoop(out.lines.empty() ? std::nullopt
                                            : std::optional(out.lines[0].number),
                          "no counter initialisation to rewrite");
  }
  std::get<Assign>(out.lines[0].stmt).expr =
      Literal{static_cast<std::int64_t>(count)};
  return out;
}

}  // namespace oscc::lang
