#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "argdlpa/universe.hpp"

namespace argdlpa {

// Finite argumentation framework (A, R) over universe indices. Attacks are restricted to A.
class ArgFramework {
 public:
  ArgFramework() = default;
  ArgFramework(ArgSet args, const AttackSet& attacks);

  [[nodiscard]] ArgSet args() const { return args_; }
  [[nodiscard]] const AttackSet& attacks() const { return attacks_; }
  [[nodiscard]] bool attacks(ArgId x, ArgId y) const { return attackers(y).contains(x); }
  [[nodiscard]] ArgSet attackers(ArgId x) const { return ArgSet(attackers_[x]); }
  [[nodiscard]] ArgSet attacked(ArgId x) const { return ArgSet(attacked_[x]); }

  friend bool operator==(const ArgFramework& a, const ArgFramework& b) {
    return a.args_ == b.args_ && a.attacks_ == b.attacks_;
  }
  // Arguments in canonical set order, then attack sets lexicographically.
  friend bool operator<(const ArgFramework& a, const ArgFramework& b);

 private:
  ArgSet args_;
  AttackSet attacks_;
  std::array<std::uint64_t, kMaxUniverse> attackers_{};
  std::array<std::uint64_t, kMaxUniverse> attacked_{};
};

[[nodiscard]] std::string to_string(const ArgFramework& af, const Universe& u);

enum class Semantics : std::uint8_t { stable, complete, grounded, preferred, semi_stable, ideal, eager, naive, stage };

inline constexpr std::array<Semantics, 9> kAllSemantics = {
    Semantics::stable, Semantics::complete, Semantics::grounded, Semantics::preferred, Semantics::semi_stable,
    Semantics::ideal,  Semantics::eager,    Semantics::naive,    Semantics::stage};

// Short names: st co gr pr se id ea na stg.
[[nodiscard]] std::string_view to_string(Semantics s);
[[nodiscard]] std::optional<Semantics> parse_semantics(std::string_view s);

// E+ = arguments of af attacked by some member of E. E must be a subset of af.args().
[[nodiscard]] ArgSet attacked_by(const ArgFramework& af, ArgSet e);
// E (+) = E together with E+.
[[nodiscard]] ArgSet range(const ArgFramework& af, ArgSet e);
[[nodiscard]] bool is_conflict_free(const ArgFramework& af, ArgSet e);
[[nodiscard]] bool defends(const ArgFramework& af, ArgSet e, ArgId a);
[[nodiscard]] bool is_admissible(const ArgFramework& af, ArgSet e);

inline constexpr std::size_t kDefaultOracleBound = 20;

// All sigma-extensions in canonical order. Throws ResourceError above max_args arguments.
[[nodiscard]] std::vector<ArgSet> extensions(const ArgFramework& af, Semantics s,
                                             std::size_t max_args = kDefaultOracleBound);
[[nodiscard]] bool credulously_accepted(const ArgFramework& af, Semantics s, ArgId a);
[[nodiscard]] bool sceptically_accepted(const ArgFramework& af, Semantics s, ArgId a);

}  // namespace argdlpa
