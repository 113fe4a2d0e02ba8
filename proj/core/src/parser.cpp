#include "argdlpa/parser.hpp"

#include <cctype>
#include <optional>
#include <unordered_map>
#include <variant>

namespace argdlpa {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view src) {
  static const char* const kPuncts[] = {"<->", "->", "(", ")", "[", "]", "<", ">", ",", ";",
                                        "?",   "^",  "~", "&", "|", "+", "-", "'"};
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    auto c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.span = {i, i, line, col};
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.type = Tok::ident;
      t.text = std::string(src.substr(i, j - i));
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.type = Tok::number;
      t.text = std::string(src.substr(i, j - i));
    } else {
      for (const char* p : kPuncts) {
        std::string_view pv(p);
        if (src.substr(i, pv.size()) == pv) {
          t.type = Tok::punct;
          t.text = std::string(pv);
          break;
        }
      }
      if (t.type != Tok::punct) {
        throw ParseError("unexpected character '" + std::string(1, src[i]) + "' at line " + std::to_string(line) +
                             ", column " + std::to_string(col),
                         {i, i + 1, line, col}, {}, std::string(1, src[i]));
      }
    }
    t.span.byte_end = i + t.text.size();
    advance(t.text.size());
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Tok::end;
  end.span = {src.size(), src.size(), line, col};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, Universe& u, NamePolicy policy) : toks_(lex(src)), u_(u), policy_(policy) {}

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Program whole_program() {
    Program p = program();
    expect_end();
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool is_punct(std::string_view s) const { return cur().type == Tok::punct && cur().text == s; }
  bool is_ident(std::string_view s) const { return cur().type == Tok::ident && cur().text == s; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = cur();
    std::string found = t.type == Tok::end ? "end of input" : "'" + t.text + "'";
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += " but found " + found + " at line " + std::to_string(t.span.line) + ", column " +
           std::to_string(t.span.column);
    throw ParseError(msg, t.span, std::move(expected), found);
  }

  void expect(std::string_view p) {
    if (!is_punct(p)) fail({"'" + std::string(p) + "'"});
    ++pos_;
  }

  void expect_end() {
    if (cur().type != Tok::end) fail({"end of input"});
  }

  ArgId name() {
    if (cur().type != Tok::ident) fail({"argument name"});
    std::string n = cur().text;
    ++pos_;
    if (policy_ == NamePolicy::strict) return u_.at(n);
    return u_.intern(n);
  }

  std::optional<Var> try_atom() {
    if (cur().type != Tok::ident || toks_[pos_ + 1].type != Tok::punct) return std::nullopt;
    const std::string& kw = cur().text;
    const std::string& next = toks_[pos_ + 1].text;
    if (kw == "in" && next == "'") {
      pos_ += 2;
      expect("(");
      ArgId x = name();
      expect(")");
      return Var::in_prime(x);
    }
    if (next != "(") return std::nullopt;
    if (kw == "aw" || kw == "in") {
      pos_ += 2;
      ArgId x = name();
      expect(")");
      return kw == "aw" ? Var::aw(x) : Var::in(x);
    }
    if (kw == "att") {
      pos_ += 2;
      ArgId x = name();
      expect(",");
      ArgId y = name();
      expect(")");
      return Var::att(x, y);
    }
    if (kw == "aux") {
      pos_ += 2;
      if (cur().type != Tok::number) fail({"number"});
      auto k = static_cast<std::uint32_t>(std::stoul(cur().text));
      ++pos_;
      expect(")");
      return Var::aux(k);
    }
    return std::nullopt;
  }

  Var atom() {
    if (auto v = try_atom()) return *v;
    fail({"atom"});
  }

  Formula formula() {
    Formula lhs = implication();
    while (is_punct("<->")) {
      ++pos_;
      lhs = Formula::equivalence(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (is_punct("->")) {
      ++pos_;
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> fs{conjunction()};
    while (is_punct("|")) {
      ++pos_;
      fs.push_back(conjunction());
    }
    return Formula::disjunction(std::move(fs));
  }

  Formula conjunction() {
    std::vector<Formula> fs{unary()};
    while (is_punct("&")) {
      ++pos_;
      fs.push_back(unary());
    }
    return Formula::conjunction(std::move(fs));
  }

  Formula unary() {
    if (is_punct("~")) {
      ++pos_;
      return Formula::negation(unary());
    }
    if (is_punct("[")) {
      ++pos_;
      Program p = program();
      expect("]");
      return Formula::box(p, unary());
    }
    if (is_punct("<")) {
      ++pos_;
      Program p = program();
      expect(">");
      return Formula::diamond(p, unary());
    }
    return primary();
  }

  Formula primary() {
    if (is_ident("T")) {
      ++pos_;
      return Formula::top();
    }
    if (is_ident("F")) {
      ++pos_;
      return Formula::bottom();
    }
    if (is_punct("(")) {
      ++pos_;
      Formula f = formula();
      expect(")");
      return f;
    }
    if (auto v = try_atom()) return Formula::atom(*v);
    fail({"formula"});
  }

  Program program() {
    Program lhs = sequence();
    while (is_ident("U")) {
      ++pos_;
      lhs = Program::choice(lhs, sequence());
    }
    return lhs;
  }

  Program sequence() {
    Program lhs = postfix();
    while (is_punct(";")) {
      ++pos_;
      lhs = Program::sequence(lhs, postfix());
    }
    return lhs;
  }

  Program postfix() {
    Program p = program_primary();
    while (is_punct("^")) {
      ++pos_;
      p = Program::converse(p);
    }
    return p;
  }

  // Parses "formula ?" at the current position; results are cached per position so
  // nested parentheses do not backtrack exponentially.
  std::variant<Program, ParseError> test_attempt() {
    std::size_t start = pos_;
    auto it = tests_.find(start);
    if (it != tests_.end()) {
      if (std::holds_alternative<std::pair<Program, std::size_t>>(it->second)) {
        const auto& [p, end] = std::get<std::pair<Program, std::size_t>>(it->second);
        pos_ = end;
        return p;
      }
      return std::get<ParseError>(it->second);
    }
    try {
      Formula f = formula();
      expect("?");
      Program p = Program::test(f);
      tests_.emplace(start, std::pair<Program, std::size_t>{p, pos_});
      return p;
    } catch (const ParseError& e) {
      tests_.emplace(start, e);
      return e;
    }
  }

  Program program_primary() {
    if (is_punct("+") || is_punct("-")) {
      bool positive = cur().text == "+";
      ++pos_;
      Var v = atom();
      return positive ? Program::assign_true(v) : Program::assign_false(v);
    }
    if (is_ident("skip")) {
      ++pos_;
      return Program::test(Formula::top());
    }
    std::size_t start = pos_;
    auto attempt = test_attempt();
    if (std::holds_alternative<Program>(attempt)) return std::get<Program>(attempt);
    ParseError as_test = std::get<ParseError>(attempt);
    pos_ = start;
    if (!is_punct("(")) throw as_test;
    try {
      ++pos_;
      Program p = program();
      expect(")");
      return p;
    } catch (const ParseError& as_program) {
      if (as_test.span().byte_start > as_program.span().byte_start) throw as_test;
      throw;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Universe& u_;
  NamePolicy policy_;
  std::unordered_map<std::size_t, std::variant<std::pair<Program, std::size_t>, ParseError>> tests_;
};

// Formula precedence: 1 <->, 2 ->, 3 |, 4 &, 5 unary/atomic.
int level(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::equivalence: return 1;
    case FormulaKind::implication: return 2;
    case FormulaKind::disjunction: return 3;
    case FormulaKind::conjunction: return 4;
    default: return 5;
  }
}

// Program precedence: 1 U, 2 ;, 3 ^, 4 atomic.
int level(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::choice: return 1;
    case ProgramKind::sequence: return 2;
    case ProgramKind::converse: return 3;
    default: return 4;
  }
}

class Printer {
 public:
  explicit Printer(const Universe& u) : u_(u) {}

  void formula(const Formula& f, int min_level) {
    bool paren = level(f) < min_level;
    if (paren) out_ += "(";
    switch (f.kind()) {
      case FormulaKind::atom: out_ += u_.var_name(f.var()); break;
      case FormulaKind::top: out_ += "T"; break;
      case FormulaKind::bottom: out_ += "F"; break;
      case FormulaKind::negation:
        out_ += "~";
        formula(f.operands()[0], 5);
        break;
      case FormulaKind::conjunction: nary(f, " & ", 5); break;
      case FormulaKind::disjunction: nary(f, " | ", 4); break;
      case FormulaKind::implication:
        formula(f.operands()[0], 3);
        out_ += " -> ";
        formula(f.operands()[1], 2);
        break;
      case FormulaKind::equivalence:
        formula(f.operands()[0], 2);
        out_ += " <-> ";
        formula(f.operands()[1], 2);
        break;
      case FormulaKind::box:
        out_ += "[";
        program(f.program(), 1);
        out_ += "] ";
        formula(f.operands()[0], 5);
        break;
      case FormulaKind::diamond:
        out_ += "<";
        program(f.program(), 1);
        out_ += "> ";
        formula(f.operands()[0], 5);
        break;
    }
    if (paren) out_ += ")";
  }

  void program(const Program& p, int min_level) {
    bool paren = level(p) < min_level;
    if (paren) out_ += "(";
    switch (p.kind()) {
      case ProgramKind::assign_true: out_ += "+" + u_.var_name(p.var()); break;
      case ProgramKind::assign_false: out_ += "-" + u_.var_name(p.var()); break;
      case ProgramKind::test:
        if (p.is_skip()) {
          out_ += "skip";
        } else {
          formula(p.formula(), 1);
          out_ += "?";
        }
        break;
      case ProgramKind::sequence:
        program(p.operands()[0], 2);
        out_ += " ; ";
        program(p.operands()[1], 3);
        break;
      case ProgramKind::choice:
        program(p.operands()[0], 1);
        out_ += " U ";
        program(p.operands()[1], 2);
        break;
      case ProgramKind::converse:
        program(p.operands()[0], 3);
        out_ += "^";
        break;
    }
    if (paren) out_ += ")";
  }

  std::string take() { return std::move(out_); }

 private:
  void nary(const Formula& f, const char* sep, int child_level) {
    bool first = true;
    for (const auto& g : f.operands()) {
      if (!first) out_ += sep;
      first = false;
      formula(g, child_level);
    }
  }

  const Universe& u_;
  std::string out_;
};

}  // namespace

Formula parse_formula(std::string_view text, Universe& universe, NamePolicy policy) {
  return Parser(text, universe, policy).whole_formula();
}

Program parse_program(std::string_view text, Universe& universe, NamePolicy policy) {
  return Parser(text, universe, policy).whole_program();
}

std::string print(const Formula& f, const Universe& universe) {
  Printer p(universe);
  p.formula(f, 1);
  return p.take();
}

std::string print(const Program& prog, const Universe& universe) {
  Printer p(universe);
  p.program(prog, 1);
  return p.take();
}

}  // namespace argdlpa
