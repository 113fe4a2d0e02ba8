#pragma once

#include <variant>
#include <vector>

#include "argdlpa/uncertainty.hpp"

namespace argdlpa {

struct Caf {
  ArgSet fixed_args;
  AttackSet fixed_attacks;
  ArgSet uncertain_args;
  AttackSet uncertain_attacks;
  AttackSet sym_attacks;
  ArgSet control_args;
  AttackSet control_attacks;

  void validate(const Universe& u) const;
};

// Constraint is Boolean over aw/att variables of the static arguments.
struct Cciaf {
  ArgSet control_args;
  AttackSet control_attacks;
  ArgSet static_args;
  Formula constraint;

  void validate(const Universe& u) const;
};

using Control = std::variant<Caf, Cciaf>;

struct ControlConfiguration {
  ArgSet chosen;

  friend bool operator==(const ControlConfiguration&, const ControlConfiguration&) = default;
};

void validate(const Control& c, const Universe& u);
[[nodiscard]] ArgSet control_args(const Control& c);

// All configurations of the control arguments in canonical subset order.
[[nodiscard]] std::vector<ControlConfiguration> configurations(const Control& c);

// Throws DomainError when cfg is not a subset of the control arguments.
[[nodiscard]] Caf under_configuration(const Caf& caf, const ControlConfiguration& cfg);
[[nodiscard]] Cciaf under_configuration(const Cciaf& c, const ControlConfiguration& cfg);
[[nodiscard]] Control under_configuration(const Control& c, const ControlConfiguration& cfg);

// Completions with every control argument of the structure communicated.
[[nodiscard]] CompletionSet completions_direct(const Caf& caf, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const Cciaf& c, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const Control& c, std::size_t bound = kDefaultCompletionBound);
// Union over all configurations.
[[nodiscard]] CompletionSet completions_any_configuration(const Control& c);

[[nodiscard]] Valuation valuation_of(const Caf& caf, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const Cciaf& c, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const Control& c, std::size_t universe_size);
[[nodiscard]] Program control_program(const Control& c);
[[nodiscard]] Program make_comp(const Caf& caf);
[[nodiscard]] Program make_comp(const Cciaf& c);
[[nodiscard]] Program make_comp(const Control& c);

// Control merged into the fixed part.
[[nodiscard]] Riaf merged_riaf(const Caf& caf);

// Moves a from the uncertain to the fixed arguments. Throws DomainError if a is not uncertain.
[[nodiscard]] Iaf settle(const Iaf& iaf, ArgId a);
// Completion AFs reached by makeComp; +aw(a).
[[nodiscard]] CompletionSet settle_completions_dlpa(const Iaf& iaf, ArgId a, Evaluator& evaluator);

// A control structure with one configuration applied; its completions contain the chosen arguments.
struct ConfiguredControl {
  Control control;
  ControlConfiguration cfg;
};

using ConstraintTarget = std::variant<Iaf, Riaf, Ciaf, CiafJm, DArgIaf, ConfiguredControl>;

[[nodiscard]] CompletionSet completions_direct(const ConstraintTarget& t);

// Start valuation and completion program of a structure.
struct CompletionProgram {
  Valuation start;
  Program program;
};
[[nodiscard]] CompletionProgram completion_program(const ConstraintTarget& t, std::size_t universe_size);

enum class ConstraintMode : std::uint8_t { possible, necessary };

// Replaces att(x,y) by aw(x) & aw(y) & att(x,y) so that dangling attack variables are invisible.
[[nodiscard]] Formula guard_attacks(const Formula& phi);

// <makeComp>phi or [makeComp]phi. Throws DomainError unless phi is Boolean over aw/att.
[[nodiscard]] bool check_structural_constraint(const ConstraintTarget& t, const Formula& phi, ConstraintMode mode,
                                               std::size_t universe_size);
[[nodiscard]] bool check_structural_constraint_direct(const ConstraintTarget& t, const Formula& phi,
                                                      ConstraintMode mode, std::size_t universe_size);
// <makeComp; +aw(a)>phi or [makeComp; +aw(a)]phi.
[[nodiscard]] bool check_enforcement(const Iaf& iaf, ArgId a, const Formula& phi, ConstraintMode mode,
                                     std::size_t universe_size);
[[nodiscard]] bool check_enforcement_direct(const Iaf& iaf, ArgId a, const Formula& phi, ConstraintMode mode,
                                            std::size_t universe_size);

}  // namespace argdlpa
