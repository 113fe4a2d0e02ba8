#include "argdlpa/syntax.hpp"

#include <algorithm>
#include <set>

namespace argdlpa {

namespace {

std::shared_ptr<const detail::FormulaNode> make_formula(FormulaKind kind) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = kind;
  return n;
}

const Formula& shared_top() {
  static const Formula t = Formula::top();
  return t;
}

}  // namespace

Formula::Formula() : node_(shared_top().node_) {}

Formula Formula::atom(Var v) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::atom;
  n->var = v;
  return Formula(std::move(n));
}

Formula Formula::top() { return Formula(make_formula(FormulaKind::top)); }
Formula Formula::bottom() { return Formula(make_formula(FormulaKind::bottom)); }

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::negation;
  n->operands.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conjunction(std::vector<Formula> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return std::move(fs.front());
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::conjunction;
  n->operands = std::move(fs);
  return Formula(std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  if (fs.empty()) return bottom();
  if (fs.size() == 1) return std::move(fs.front());
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::disjunction;
  n->operands = std::move(fs);
  return Formula(std::move(n));
}

Formula Formula::implication(Formula a, Formula b) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::implication;
  n->operands = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::equivalence(Formula a, Formula b) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::equivalence;
  n->operands = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::box(Program p, Formula f) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::box;
  n->operands.push_back(std::move(f));
  n->program.push_back(std::move(p));
  return Formula(std::move(n));
}

Formula Formula::diamond(Program p, Formula f) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = FormulaKind::diamond;
  n->operands.push_back(std::move(f));
  n->program.push_back(std::move(p));
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == FormulaKind::atom) return a.var() == b.var();
  if (a.node_->operands.size() != b.node_->operands.size()) return false;
  for (std::size_t i = 0; i < a.node_->operands.size(); ++i) {
    if (!(a.node_->operands[i] == b.node_->operands[i])) return false;
  }
  if (a.kind() == FormulaKind::box || a.kind() == FormulaKind::diamond) {
    return a.program() == b.program();
  }
  return true;
}

Program::Program() : Program(test(Formula())) {}

Program Program::assign_true(Var v) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = ProgramKind::assign_true;
  n->var = v;
  return Program(std::move(n));
}

Program Program::assign_false(Var v) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = ProgramKind::assign_false;
  n->var = v;
  return Program(std::move(n));
}

Program Program::test(Formula f) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = ProgramKind::test;
  n->formula.push_back(std::move(f));
  return Program(std::move(n));
}

Program Program::sequence(Program a, Program b) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = ProgramKind::sequence;
  n->operands = {std::move(a), std::move(b)};
  return Program(std::move(n));
}

Program Program::choice(Program a, Program b) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = ProgramKind::choice;
  n->operands = {std::move(a), std::move(b)};
  return Program(std::move(n));
}

Program Program::converse(Program p) {
  auto n = std::make_shared<detail::ProgramNode>();
  n->kind = ProgramKind::converse;
  n->operands.push_back(std::move(p));
  return Program(std::move(n));
}

bool Program::is_skip() const {
  return kind() == ProgramKind::test && formula().kind() == FormulaKind::top;
}

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ProgramKind::assign_true:
    case ProgramKind::assign_false: return a.var() == b.var();
    case ProgramKind::test: return a.formula() == b.formula();
    default: break;
  }
  if (a.operands().size() != b.operands().size()) return false;
  for (std::size_t i = 0; i < a.operands().size(); ++i) {
    if (!(a.operands()[i] == b.operands()[i])) return false;
  }
  return true;
}

namespace {

void collect(const Formula& f, std::set<Var>& out, std::set<const void*>& seen, bool assigned_only);

void collect(const Program& p, std::set<Var>& out, std::set<const void*>& seen, bool assigned_only = false) {
  if (!seen.insert(p.node()).second) return;
  switch (p.kind()) {
    case ProgramKind::assign_true:
    case ProgramKind::assign_false: out.insert(p.var()); return;
    case ProgramKind::test: collect(p.formula(), out, seen, assigned_only); return;
    default:
      for (const auto& q : p.operands()) collect(q, out, seen, assigned_only);
  }
}

void collect(const Formula& f, std::set<Var>& out, std::set<const void*>& seen, bool assigned_only = false) {
  if (!seen.insert(f.node()).second) return;
  if (f.kind() == FormulaKind::atom) {
    if (!assigned_only) out.insert(f.var());
    return;
  }
  for (const auto& g : f.operands()) collect(g, out, seen, assigned_only);
  if (f.kind() == FormulaKind::box || f.kind() == FormulaKind::diamond) {
    collect(f.program(), out, seen, assigned_only);
  }
}

}  // namespace

std::vector<Var> variables(const Formula& f) {
  std::set<Var> out;
  std::set<const void*> seen;
  collect(f, out, seen);
  return {out.begin(), out.end()};
}

std::vector<Var> variables(const Program& p) {
  std::set<Var> out;
  std::set<const void*> seen;
  collect(p, out, seen);
  return {out.begin(), out.end()};
}

std::vector<Var> assigned_vars(const Program& p) {
  std::set<Var> out;
  std::set<const void*> seen;
  collect(p, out, seen, true);
  return {out.begin(), out.end()};
}

namespace {

Program pushdown(const Program& p, bool inverted) {
  switch (p.kind()) {
    case ProgramKind::assign_true:
    case ProgramKind::assign_false: return inverted ? Program::converse(p) : p;
    case ProgramKind::test: return p;
    case ProgramKind::sequence: {
      Program a = pushdown(p.operands()[0], inverted);
      Program b = pushdown(p.operands()[1], inverted);
      return inverted ? Program::sequence(b, a) : Program::sequence(a, b);
    }
    case ProgramKind::choice:
      return Program::choice(pushdown(p.operands()[0], inverted), pushdown(p.operands()[1], inverted));
    case ProgramKind::converse: return pushdown(p.operands()[0], !inverted);
  }
  return p;
}

}  // namespace

Program converse_pushdown(const Program& p) { return pushdown(p, false); }

bool is_boolean(const Formula& f) {
  if (f.kind() == FormulaKind::box || f.kind() == FormulaKind::diamond) return false;
  return std::all_of(f.operands().begin(), f.operands().end(), [](const Formula& g) { return is_boolean(g); });
}

std::size_t node_count(const Formula& f) {
  std::size_t c = 1;
  for (const auto& g : f.operands()) c += node_count(g);
  return c;
}

}  // namespace argdlpa
