#pragma once

#include <functional>
#include <vector>

#include "argdlpa/syntax.hpp"

namespace argdlpa {

[[nodiscard]] Program skip();
[[nodiscard]] Program if_then_else(Formula cond, Program then_p, Program else_p);
[[nodiscard]] Program if_then(Formula cond, Program then_p);

// Left-folded over vars in canonical order; empty ranges give skip.
[[nodiscard]] Program seq_over(std::vector<Var> vars, const std::function<Program(const Var&)>& body);
[[nodiscard]] Program choice_over(std::vector<Var> vars, const std::function<Program(const Var&)>& body);
[[nodiscard]] Program seq_all(const std::vector<Program>& ps);

[[nodiscard]] Formula conj_over(const std::vector<Var>& vars, const std::function<Formula(const Var&)>& body);
[[nodiscard]] Formula disj_over(const std::vector<Var>& vars, const std::function<Formula(const Var&)>& body);

[[nodiscard]] Program mk_true_one(std::vector<Var> vars);
[[nodiscard]] Program mk_false_one(std::vector<Var> vars);
[[nodiscard]] Program mk_true_some(std::vector<Var> vars);
[[nodiscard]] Program mk_false_some(std::vector<Var> vars);
[[nodiscard]] Program vary(std::vector<Var> vars);

// For each listed attack pair (x,y), in order: +att(x,y) U +att(y,x).
[[nodiscard]] Program dis(const AttackSet& pairs);

// Copies in(x) into in'(x) for every argument of the set.
[[nodiscard]] Program copy_in(ArgSet args);

}  // namespace argdlpa
