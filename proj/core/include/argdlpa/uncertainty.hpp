#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "argdlpa/af.hpp"
#include "argdlpa/syntax.hpp"
#include "argdlpa/valuation.hpp"

namespace argdlpa {

class Evaluator;

struct Iaf {
  ArgSet fixed_args;
  AttackSet fixed_attacks;
  ArgSet uncertain_args;
  AttackSet uncertain_attacks;

  void validate(const Universe& u) const;
};

struct Riaf {
  ArgSet fixed_args;
  AttackSet fixed_attacks;
  ArgSet uncertain_args;
  AttackSet uncertain_attacks;
  AttackSet sym_attacks;  // symmetric, irreflexive

  void validate(const Universe& u) const;
};

// Constraint is Boolean over aw/att variables of args.
struct Ciaf {
  ArgSet args;
  Formula constraint;

  void validate(const Universe& u) const;
};

// Graph-theoretic variant: completions of the IAF that some model of the constraint describes.
struct CiafJm {
  Iaf iaf;
  Formula constraint;

  void validate(const Universe& u) const;
};

struct Dependency {
  enum class Kind : std::uint8_t { implies, disjunction, nand, choice };
  Kind kind = Kind::disjunction;
  ArgSet x;
  ArgSet y;  // implies only

  [[nodiscard]] bool satisfied_by(ArgSet completion_args) const;
};

struct DArgIaf {
  ArgSet args;
  ArgSet uncertain_args;
  AttackSet attacks;
  std::vector<Dependency> deps;

  void validate(const Universe& u) const;
};

using Structure = std::variant<Iaf, Riaf, Ciaf, CiafJm, DArgIaf>;

[[nodiscard]] Iaf iaf_of_af(const ArgFramework& af);
[[nodiscard]] Riaf riaf_of_iaf(const Iaf& iaf);
void validate(const Structure& s, const Universe& u);

using CompletionSet = std::vector<ArgFramework>;

inline constexpr std::size_t kDefaultCompletionBound = std::size_t{1} << 22;

// Completions computed from the set-theoretic definitions, canonically ordered.
[[nodiscard]] CompletionSet completions_direct(const Iaf& s, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const Riaf& s, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const Ciaf& s, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const CiafJm& s, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const DArgIaf& s, std::size_t bound = kDefaultCompletionBound);
[[nodiscard]] CompletionSet completions_direct(const Structure& s, std::size_t bound = kDefaultCompletionBound);

[[nodiscard]] Valuation valuation_of(const Iaf& s, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const Riaf& s, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const Ciaf& s, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const CiafJm& s, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const DArgIaf& s, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of(const Structure& s, std::size_t universe_size);

[[nodiscard]] Program make_comp(const Iaf& s);
[[nodiscard]] Program make_comp(const Riaf& s);
[[nodiscard]] Program make_comp(const Ciaf& s);
[[nodiscard]] Program make_comp(const CiafJm& s);
[[nodiscard]] Program make_comp(const DArgIaf& s);
[[nodiscard]] Program make_comp(const Structure& s);

// AFs of the successors of start under program, deduplicated and canonically ordered.
[[nodiscard]] CompletionSet afs_of_successors(const Valuation& start, const Program& program, Evaluator& evaluator);
[[nodiscard]] CompletionSet completions_dlpa(const Structure& s, Evaluator& evaluator);

// t(deltas)
[[nodiscard]] Formula translate_dependencies(const std::vector<Dependency>& deps);

[[nodiscard]] Formula theory_of_af(const ArgFramework& af, std::size_t universe_size);
[[nodiscard]] Formula theory_of_iaf(const Iaf& iaf, std::size_t universe_size);

// cIAF over the whole universe whose constraint is the disjunction of the graphs' theories.
[[nodiscard]] Ciaf ciaf_from_completion_set(const CompletionSet& graphs, std::size_t universe_size);

// Searches all rIAFs (or only IAFs) over the universe for one with the given completion set.
[[nodiscard]] std::optional<Riaf> find_expressing_riaf(const CompletionSet& target, std::size_t universe_size,
                                                       bool iaf_only = false);
// True iff no rIAF over {a,b} has the completion set of the two-argument one-way-attack cIAF.
[[nodiscard]] bool riaf_inexpressibility_check();
// The cIAF over {a,b} whose completions are exactly ({a,b},{(a,b)}) and ({a,b},{(b,a)}).
[[nodiscard]] Ciaf one_way_attack_ciaf();

}  // namespace argdlpa
