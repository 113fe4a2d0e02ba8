#include "argdlpa/framework_file.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "argdlpa/errors.hpp"
#include "argdlpa/parser.hpp"

namespace argdlpa {

namespace {

constexpr std::array<std::string_view, 8> kKindNames = {"af", "iaf", "riaf", "ciaf", "ciafjm", "dargiaf", "caf",
                                                        "cciaf"};

enum class FactType : std::uint8_t { arg, uarg, carg, att, uatt, satt, catt, constraint, dep };

constexpr std::array<std::string_view, 9> kFactNames = {"arg", "?arg", "carg", "att", "?att", "<->att", "catt",
                                                        "constraint", "dep"};

std::string_view fact_name(FactType t) { return kFactNames[static_cast<std::size_t>(t)]; }

bool allowed(FrameworkKind k, FactType t) {
  using F = FactType;
  switch (k) {
    case FrameworkKind::af: return t == F::arg || t == F::att;
    case FrameworkKind::iaf: return t == F::arg || t == F::uarg || t == F::att || t == F::uatt;
    case FrameworkKind::riaf: return t == F::arg || t == F::uarg || t == F::att || t == F::uatt || t == F::satt;
    case FrameworkKind::ciaf: return t == F::arg || t == F::constraint;
    case FrameworkKind::ciafjm:
      return t == F::arg || t == F::uarg || t == F::att || t == F::uatt || t == F::constraint;
    case FrameworkKind::dargiaf: return t == F::arg || t == F::uarg || t == F::att || t == F::dep;
    case FrameworkKind::caf: return t != F::constraint && t != F::dep;
    case FrameworkKind::cciaf: return t == F::arg || t == F::carg || t == F::catt || t == F::constraint;
  }
  return false;
}

struct Fact {
  Fact(FactType t, std::size_t l) : type(t), line(l) {}

  FactType type;
  std::size_t line;
  ArgId x = 0;
  ArgId y = 0;
  Formula formula;
  Dependency dep;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string line_prefix(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::string position(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

// Cursor over one line; columns are 1-based within the line.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line, std::size_t line_offset)
      : text_(text), line_(line), offset_(line_offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'", {std::string(s)});
  }
  std::string_view name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an argument name", {"name"});
    return text_.substr(start, pos_ - start);
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", {"end of line"});
  }
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    SourceSpan span{offset_ + pos_, offset_ + pos_ + 1, line_, pos_ + 1};
    std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of line";
    throw ParseError(position(line_, pos_ + 1) + msg, span, std::move(expected), found);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

class Loader {
 public:
  explicit Loader(std::string_view text) : text_(text) {}

  FrameworkFile run() {
    std::size_t offset = 0;
    std::size_t line_no = 0;
    while (offset <= text_.size()) {
      std::size_t end = text_.find('\n', offset);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(offset, end - offset);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      ++line_no;
      handle_line(raw, line_no, offset);
      offset = end + 1;
    }
    if (!kind_) {
      throw ParseError("missing 'kind:' header", {text_.size(), text_.size(), line_no, 1}, {"kind:"}, "end of input");
    }
    FrameworkFile out;
    out.kind = *kind_;
    out.universe = universe_;
    out.structure = build_located();
    return out;
  }

 private:
  void handle_line(std::string_view raw, std::size_t line, std::size_t offset) {
    std::string_view body = trim(raw);
    if (body.empty() || body.front() == '%' || body.front() == '#') return;
    std::size_t lead = static_cast<std::size_t>(body.data() - raw.data());
    LineCursor cur(raw, line, offset);

    if (!kind_) {
      if (!body.starts_with("kind:")) cur.fail("first line must be the 'kind:' header", {"kind:"});
      std::string_view k = trim(body.substr(5));
      kind_ = parse_framework_kind(k);
      if (!kind_) cur.fail("unknown framework kind '" + std::string(k) + "'", {kKindNames.begin(), kKindNames.end()});
      return;
    }
    if (body.starts_with("universe:")) {
      if (!facts_.empty() || declared_) cur.fail("'universe:' must appear once, before any fact", {"fact"});
      std::vector<std::string> names;
      std::string item;
      std::stringstream ss{std::string(body.substr(9))};
      while (std::getline(ss, item, ',')) names.emplace_back(trim(item));
      try {
        universe_ = Universe(std::move(names));
      } catch (const InvariantError& e) {
        throw InvariantError(line_prefix(line) + e.what());
      }
      declared_ = true;
      return;
    }
    if (body.starts_with("constraint:")) {
      require_allowed(FactType::constraint, cur);
      std::size_t col = lead + 11;
      Fact f{FactType::constraint, line};
      try {
        f.formula = parse_formula(raw.substr(col), universe_, policy());
      } catch (const ParseError& e) {
        SourceSpan s = e.span();
        SourceSpan shifted{offset + col + s.byte_start, offset + col + s.byte_end, line, col + s.column};
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" at line "));
        throw ParseError(position(line, shifted.column) + msg, shifted, e.expected(), e.found());
      } catch (const InvariantError& e) {
        throw InvariantError(line_prefix(line) + e.what());
      }
      facts_.push_back(std::move(f));
      return;
    }
    if (body.starts_with("dep:")) {
      require_allowed(FactType::dep, cur);
      LineCursor dc(raw.substr(lead + 4), line, offset + lead + 4);
      facts_.push_back(parse_dep(dc, line));
      return;
    }
    do {
      parse_fact(cur, line);
    } while (!cur.at_end());
  }

  NamePolicy policy() const { return declared_ ? NamePolicy::strict : NamePolicy::intern; }

  void require_allowed(FactType t, const LineCursor& cur) const {
    if (!allowed(*kind_, t)) {
      cur.fail("fact '" + std::string(fact_name(t)) + "' is not allowed in kind " + std::string(to_string(*kind_)),
               {});
    }
  }

  ArgId resolve(std::string_view name, std::size_t line) {
    if (!Universe::valid_name(name)) throw InvariantError(line_prefix(line) + "invalid argument name " + std::string(name));
    if (declared_) {
      auto id = universe_.find(name);
      if (!id) throw InvariantError(line_prefix(line) + "argument " + std::string(name) + " is not in the universe");
      return *id;
    }
    try {
      return universe_.intern(name);
    } catch (const ResourceError& e) {
      throw ResourceError(line_prefix(line) + e.what());
    }
  }

  void parse_fact(LineCursor& cur, std::size_t line) {
    // Longest prefixes first.
    static constexpr std::array<std::pair<std::string_view, FactType>, 7> kHeads = {{{"<->att", FactType::satt},
                                                                                     {"?arg", FactType::uarg},
                                                                                     {"?att", FactType::uatt},
                                                                                     {"carg", FactType::carg},
                                                                                     {"catt", FactType::catt},
                                                                                     {"arg", FactType::arg},
                                                                                     {"att", FactType::att}}};
    std::optional<FactType> type;
    for (const auto& [head, t] : kHeads) {
      if (cur.accept(head)) {
        type = t;
        break;
      }
    }
    if (!type) {
      cur.fail("unknown fact kind",
               {"arg(", "?arg(", "carg(", "att(", "?att(", "<->att(", "catt(", "constraint:", "dep:", "universe:"});
    }
    require_allowed(*type, cur);
    Fact f{*type, line};
    cur.expect("(");
    f.x = resolve(cur.name(), line);
    bool binary = *type == FactType::att || *type == FactType::uatt || *type == FactType::satt ||
                  *type == FactType::catt;
    if (binary) {
      cur.expect(",");
      f.y = resolve(cur.name(), line);
    }
    cur.expect(")");
    cur.expect(".");
    record_roles(f);
    facts_.push_back(std::move(f));
  }

  ArgSet parse_set(LineCursor& cur, std::size_t line) {
    ArgSet s;
    cur.expect("{");
    if (cur.accept("}")) return s;
    do {
      s.insert(resolve(cur.name(), line));
    } while (cur.accept(","));
    cur.expect("}");
    return s;
  }

  Fact parse_dep(LineCursor& cur, std::size_t line) {
    Fact f{FactType::dep, line};
    if (cur.accept("implies")) {
      f.dep.kind = Dependency::Kind::implies;
      cur.expect("(");
      f.dep.x = parse_set(cur, line);
      cur.expect(",");
      f.dep.y = parse_set(cur, line);
    } else {
      if (cur.accept("or")) {
        f.dep.kind = Dependency::Kind::disjunction;
      } else if (cur.accept("nand")) {
        f.dep.kind = Dependency::Kind::nand;
      } else if (cur.accept("choice")) {
        f.dep.kind = Dependency::Kind::choice;
      } else {
        cur.fail("unknown dependency kind", {"implies", "or", "nand", "choice"});
      }
      cur.expect("(");
      f.dep.x = parse_set(cur, line);
    }
    cur.expect(")");
    cur.accept(".");
    cur.expect_end();
    return f;
  }

  void record_roles(const Fact& f) {
    auto name = [&](ArgId a) { return universe_.name(a); };
    switch (f.type) {
      case FactType::arg:
      case FactType::uarg:
      case FactType::carg: {
        auto [it, fresh] = arg_roles_.emplace(f.x, std::pair{f.type, f.line});
        if (!fresh && it->second.first != f.type) {
          throw InvariantError(line_prefix(f.line) + "argument " + name(f.x) + " already declared by '" +
                               std::string(fact_name(it->second.first)) + "' on line " +
                               std::to_string(it->second.second));
        }
        break;
      }
      case FactType::satt:
        if (f.x == f.y) {
          throw InvariantError(line_prefix(f.line) + "symmetric attack (" + name(f.x) + "," + name(f.y) +
                               ") is reflexive");
        }
        check_attack_role({f.x, f.y}, f);
        check_attack_role({f.y, f.x}, f);
        break;
      case FactType::att:
      case FactType::uatt:
      case FactType::catt: check_attack_role({f.x, f.y}, f); break;
      default: break;
    }
  }

  void check_attack_role(Attack a, const Fact& f) {
    auto [it, fresh] = att_roles_.emplace(a, std::pair{f.type, f.line});
    if (!fresh && it->second.first != f.type) {
      throw InvariantError(line_prefix(f.line) + "attack (" + universe_.name(a.first) + "," +
                           universe_.name(a.second) + ") already declared by '" +
                           std::string(fact_name(it->second.first)) + "' on line " +
                           std::to_string(it->second.second));
    }
  }

  // Argument facts always count; other facts only up to max_line.
  LoadedStructure build(std::size_t max_line) const {
    ArgSet fixed, uncertain, control;
    AttackSet att, uatt, satt, catt;
    std::vector<Formula> constraints;
    std::vector<Dependency> deps;
    for (const auto& f : facts_) {
      bool arg_fact = f.type == FactType::arg || f.type == FactType::uarg || f.type == FactType::carg;
      if (!arg_fact && f.line > max_line) continue;
      switch (f.type) {
        case FactType::arg: fixed.insert(f.x); break;
        case FactType::uarg: uncertain.insert(f.x); break;
        case FactType::carg: control.insert(f.x); break;
        case FactType::att: att.insert({f.x, f.y}); break;
        case FactType::uatt: uatt.insert({f.x, f.y}); break;
        case FactType::satt:
          satt.insert({f.x, f.y});
          satt.insert({f.y, f.x});
          break;
        case FactType::catt: catt.insert({f.x, f.y}); break;
        case FactType::constraint: constraints.push_back(f.formula); break;
        case FactType::dep: deps.push_back(f.dep); break;
      }
    }
    Formula phi = Formula::conjunction(std::move(constraints));
    switch (*kind_) {
      case FrameworkKind::af: return ArgFramework(fixed, att);
      case FrameworkKind::iaf: return Iaf{fixed, att, uncertain, uatt};
      case FrameworkKind::riaf: return Riaf{fixed, att, uncertain, uatt, satt};
      case FrameworkKind::ciaf: return Ciaf{fixed, phi};
      case FrameworkKind::ciafjm: return CiafJm{Iaf{fixed, att, uncertain, uatt}, phi};
      case FrameworkKind::dargiaf: return DArgIaf{fixed, uncertain, att, deps};
      case FrameworkKind::caf: return Caf{fixed, att, uncertain, uatt, satt, control, catt};
      case FrameworkKind::cciaf: return Cciaf{control, catt, fixed, phi};
    }
    return ArgFramework{};
  }

  static void validate_loaded(const LoadedStructure& s, const Universe& u) {
    std::visit(
        [&](const auto& x) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, ArgFramework>) x.validate(u);
        },
        s);
  }

  LoadedStructure build_located() const {
    LoadedStructure full = build(std::numeric_limits<std::size_t>::max());
    try {
      validate_loaded(full, universe_);
      return full;
    } catch (const InvariantError& e) {
      for (const auto& f : facts_) {
        try {
          validate_loaded(build(f.line), universe_);
        } catch (const InvariantError& inner) {
          throw InvariantError(line_prefix(f.line) + inner.what());
        }
      }
      throw;
    }
  }

  std::string_view text_;
  std::optional<FrameworkKind> kind_;
  Universe universe_;
  bool declared_ = false;
  std::vector<Fact> facts_;
  std::map<ArgId, std::pair<FactType, std::size_t>> arg_roles_;
  std::map<Attack, std::pair<FactType, std::size_t>> att_roles_;
};

void write_args(std::ostream& os, std::string_view head, ArgSet s, const Universe& u) {
  s.for_each([&](ArgId a) { os << head << '(' << u.name(a) << ").\n"; });
}

void write_attacks(std::ostream& os, std::string_view head, const AttackSet& atts, const Universe& u,
                   bool one_direction = false) {
  for (const auto& [x, y] : atts) {
    if (one_direction && x > y) continue;
    os << head << '(' << u.name(x) << ',' << u.name(y) << ").\n";
  }
}

void write_constraint(std::ostream& os, const Formula& f, const Universe& u) {
  if (f.kind() != FormulaKind::top) os << "constraint: " << print(f, u) << '\n';
}

std::string dep_string(const Dependency& d, const Universe& u) {
  switch (d.kind) {
    case Dependency::Kind::implies: return "implies(" + u.set_string(d.x) + "," + u.set_string(d.y) + ")";
    case Dependency::Kind::disjunction: return "or(" + u.set_string(d.x) + ")";
    case Dependency::Kind::nand: return "nand(" + u.set_string(d.x) + ")";
    case Dependency::Kind::choice: return "choice(" + u.set_string(d.x) + ")";
  }
  return "";
}

}  // namespace

std::string_view to_string(FrameworkKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<FrameworkKind> parse_framework_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == s) return static_cast<FrameworkKind>(i);
  }
  return std::nullopt;
}

FrameworkFile parse_framework(std::string_view text) { return Loader(text).run(); }

FrameworkFile load_framework(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvariantError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_framework(ss.str());
}

std::string write_framework(const FrameworkFile& file) {
  const Universe& u = file.universe;
  std::ostringstream os;
  os << "kind: " << to_string(file.kind) << '\n';
  os << "universe: ";
  for (std::size_t i = 0; i < u.size(); ++i) os << (i ? ", " : "") << u.name(static_cast<ArgId>(i));
  os << '\n';
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ArgFramework>) {
          write_args(os, "arg", x.args(), u);
          write_attacks(os, "att", x.attacks(), u);
        } else if constexpr (std::is_same_v<T, Iaf>) {
          write_args(os, "arg", x.fixed_args, u);
          write_args(os, "?arg", x.uncertain_args, u);
          write_attacks(os, "att", x.fixed_attacks, u);
          write_attacks(os, "?att", x.uncertain_attacks, u);
        } else if constexpr (std::is_same_v<T, Riaf> || std::is_same_v<T, Caf>) {
          write_args(os, "arg", x.fixed_args, u);
          write_args(os, "?arg", x.uncertain_args, u);
          if constexpr (std::is_same_v<T, Caf>) write_args(os, "carg", x.control_args, u);
          write_attacks(os, "att", x.fixed_attacks, u);
          write_attacks(os, "?att", x.uncertain_attacks, u);
          write_attacks(os, "<->att", x.sym_attacks, u, true);
          if constexpr (std::is_same_v<T, Caf>) write_attacks(os, "catt", x.control_attacks, u);
        } else if constexpr (std::is_same_v<T, Ciaf>) {
          write_args(os, "arg", x.args, u);
          write_constraint(os, x.constraint, u);
        } else if constexpr (std::is_same_v<T, CiafJm>) {
          write_args(os, "arg", x.iaf.fixed_args, u);
          write_args(os, "?arg", x.iaf.uncertain_args, u);
          write_attacks(os, "att", x.iaf.fixed_attacks, u);
          write_attacks(os, "?att", x.iaf.uncertain_attacks, u);
          write_constraint(os, x.constraint, u);
        } else if constexpr (std::is_same_v<T, DArgIaf>) {
          write_args(os, "arg", x.args, u);
          write_args(os, "?arg", x.uncertain_args, u);
          write_attacks(os, "att", x.attacks, u);
          for (const auto& d : x.deps) os << "dep: " << dep_string(d, u) << '\n';
        } else {
          write_args(os, "arg", x.static_args, u);
          write_args(os, "carg", x.control_args, u);
          write_attacks(os, "catt", x.control_attacks, u);
          write_constraint(os, x.constraint, u);
        }
      },
      file.structure);
  return os.str();
}

bool is_control(const FrameworkFile& file) {
  return file.kind == FrameworkKind::caf || file.kind == FrameworkKind::cciaf;
}

Structure as_structure(const FrameworkFile& file) {
  return std::visit(
      [&](const auto& x) -> Structure {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ArgFramework>) {
          return iaf_of_af(x);
        } else if constexpr (std::is_same_v<T, Caf> || std::is_same_v<T, Cciaf>) {
          throw DomainError("a " + std::string(to_string(file.kind)) + " file is a control structure");
        } else {
          return x;
        }
      },
      file.structure);
}

Control as_control(const FrameworkFile& file) {
  if (const auto* c = std::get_if<Caf>(&file.structure)) return *c;
  if (const auto* c = std::get_if<Cciaf>(&file.structure)) return *c;
  throw DomainError("a " + std::string(to_string(file.kind)) + " file has no control arguments");
}

ConstraintTarget as_constraint_target(const FrameworkFile& file, std::optional<ControlConfiguration> cfg) {
  if (is_control(file)) {
    Control c = as_control(file);
    return ConfiguredControl{c, cfg.value_or(ControlConfiguration{control_args(c)})};
  }
  if (cfg) throw DomainError("a configuration was given for a framework without control arguments");
  return std::visit([](const auto& x) -> ConstraintTarget { return x; }, as_structure(file));
}

}  // namespace argdlpa
