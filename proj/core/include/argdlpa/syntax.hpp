#pragma once

#include <memory>
#include <span>
#include <vector>

#include "argdlpa/universe.hpp"

namespace argdlpa {

enum class FormulaKind : std::uint8_t {
  atom,
  top,
  bottom,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  box,
  diamond,
};

enum class ProgramKind : std::uint8_t {
  assign_true,
  assign_false,
  test,
  sequence,
  choice,
  converse,
};

namespace detail {
struct FormulaNode;
struct ProgramNode;
}  // namespace detail

class Program;

// Immutable, shared formula tree. Default-constructed formula is T.
class Formula {
 public:
  Formula();

  [[nodiscard]] static Formula atom(Var v);
  [[nodiscard]] static Formula top();
  [[nodiscard]] static Formula bottom();
  [[nodiscard]] static Formula negation(Formula f);
  // Zero operands give T (resp. F), one operand gives the operand itself.
  [[nodiscard]] static Formula conjunction(std::vector<Formula> fs);
  [[nodiscard]] static Formula disjunction(std::vector<Formula> fs);
  [[nodiscard]] static Formula implication(Formula a, Formula b);
  [[nodiscard]] static Formula equivalence(Formula a, Formula b);
  [[nodiscard]] static Formula box(Program p, Formula f);
  [[nodiscard]] static Formula diamond(Program p, Formula f);

  [[nodiscard]] FormulaKind kind() const;
  [[nodiscard]] const Var& var() const;
  [[nodiscard]] std::span<const Formula> operands() const;
  [[nodiscard]] const Program& program() const;
  [[nodiscard]] const detail::FormulaNode* node() const { return node_.get(); }
  [[nodiscard]] std::shared_ptr<const detail::FormulaNode> shared() const { return node_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

// Immutable, shared program tree. Default-constructed program is skip (T?).
class Program {
 public:
  Program();

  [[nodiscard]] static Program assign_true(Var v);
  [[nodiscard]] static Program assign_false(Var v);
  [[nodiscard]] static Program test(Formula f);
  [[nodiscard]] static Program sequence(Program a, Program b);
  [[nodiscard]] static Program choice(Program a, Program b);
  [[nodiscard]] static Program converse(Program p);

  [[nodiscard]] ProgramKind kind() const;
  [[nodiscard]] const Var& var() const;
  [[nodiscard]] const Formula& formula() const;
  [[nodiscard]] std::span<const Program> operands() const;
  [[nodiscard]] bool is_skip() const;
  [[nodiscard]] const detail::ProgramNode* node() const { return node_.get(); }
  [[nodiscard]] std::shared_ptr<const detail::ProgramNode> shared() const { return node_; }

  friend bool operator==(const Program& a, const Program& b);

 private:
  explicit Program(std::shared_ptr<const detail::ProgramNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::ProgramNode> node_;
};

namespace detail {

struct FormulaNode {
  FormulaKind kind = FormulaKind::top;
  Var var{};
  std::vector<Formula> operands;
  std::vector<Program> program;  // one element for box/diamond
};

struct ProgramNode {
  ProgramKind kind = ProgramKind::test;
  Var var{};
  std::vector<Formula> formula;  // one element for test
  std::vector<Program> operands;
};

}  // namespace detail

inline FormulaKind Formula::kind() const { return node_->kind; }
inline const Var& Formula::var() const { return node_->var; }
inline std::span<const Formula> Formula::operands() const { return node_->operands; }
inline const Program& Formula::program() const { return node_->program.front(); }

inline ProgramKind Program::kind() const { return node_->kind; }
inline const Var& Program::var() const { return node_->var; }
inline const Formula& Program::formula() const { return node_->formula.front(); }
inline std::span<const Program> Program::operands() const { return node_->operands; }

// Variables occurring anywhere in the tree, sorted.
[[nodiscard]] std::vector<Var> variables(const Formula& f);
[[nodiscard]] std::vector<Var> variables(const Program& p);
// Variables assigned by +p/-p anywhere in the program, including inside tests.
[[nodiscard]] std::vector<Var> assigned_vars(const Program& p);
// Equivalent program with converse applied to atomic assignments only.
[[nodiscard]] Program converse_pushdown(const Program& p);
[[nodiscard]] bool is_boolean(const Formula& f);
[[nodiscard]] std::size_t node_count(const Formula& f);

}  // namespace argdlpa
