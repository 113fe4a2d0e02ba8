#include "argdlpa/programs.hpp"

#include <algorithm>

namespace argdlpa {

namespace {

void canonicalize(std::vector<Var>& vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

}  // namespace

Program skip() { return Program::test(Formula::top()); }

Program if_then_else(Formula cond, Program then_p, Program else_p) {
  return Program::choice(Program::sequence(Program::test(cond), std::move(then_p)),
                         Program::sequence(Program::test(Formula::negation(cond)), std::move(else_p)));
}

Program if_then(Formula cond, Program then_p) { return if_then_else(std::move(cond), std::move(then_p), skip()); }

Program seq_over(std::vector<Var> vars, const std::function<Program(const Var&)>& body) {
  canonicalize(vars);
  if (vars.empty()) return skip();
  Program acc = body(vars.front());
  for (std::size_t i = 1; i < vars.size(); ++i) acc = Program::sequence(acc, body(vars[i]));
  return acc;
}

Program choice_over(std::vector<Var> vars, const std::function<Program(const Var&)>& body) {
  canonicalize(vars);
  if (vars.empty()) return skip();
  Program acc = body(vars.front());
  for (std::size_t i = 1; i < vars.size(); ++i) acc = Program::choice(acc, body(vars[i]));
  return acc;
}

Program seq_all(const std::vector<Program>& ps) {
  if (ps.empty()) return skip();
  Program acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = Program::sequence(acc, ps[i]);
  return acc;
}

Formula conj_over(const std::vector<Var>& vars, const std::function<Formula(const Var&)>& body) {
  std::vector<Formula> fs;
  fs.reserve(vars.size());
  for (const auto& v : vars) fs.push_back(body(v));
  return Formula::conjunction(std::move(fs));
}

Formula disj_over(const std::vector<Var>& vars, const std::function<Formula(const Var&)>& body) {
  std::vector<Formula> fs;
  fs.reserve(vars.size());
  for (const auto& v : vars) fs.push_back(body(v));
  return Formula::disjunction(std::move(fs));
}

Program mk_true_one(std::vector<Var> vars) {
  return choice_over(std::move(vars), [](const Var& p) {
    return Program::sequence(Program::test(Formula::negation(Formula::atom(p))), Program::assign_true(p));
  });
}

Program mk_false_one(std::vector<Var> vars) {
  return choice_over(std::move(vars), [](const Var& p) {
    return Program::sequence(Program::test(Formula::atom(p)), Program::assign_false(p));
  });
}

Program mk_true_some(std::vector<Var> vars) {
  return seq_over(std::move(vars), [](const Var& p) { return Program::choice(Program::assign_true(p), skip()); });
}

Program mk_false_some(std::vector<Var> vars) {
  return seq_over(std::move(vars), [](const Var& p) { return Program::choice(Program::assign_false(p), skip()); });
}

Program vary(std::vector<Var> vars) {
  return seq_over(std::move(vars),
                  [](const Var& p) { return Program::choice(Program::assign_true(p), Program::assign_false(p)); });
}

Program dis(const AttackSet& pairs) {
  std::vector<Program> steps;
  for (const auto& [x, y] : pairs) {
    steps.push_back(Program::choice(Program::assign_true(Var::att(x, y)), Program::assign_true(Var::att(y, x))));
  }
  return seq_all(steps);
}

Program copy_in(ArgSet args) {
  return seq_over(in_vars(args), [](const Var& v) {
    Var primed = Var::in_prime(v.first);
    return Program::choice(Program::sequence(Program::test(Formula::atom(v)), Program::assign_true(primed)),
                           Program::sequence(Program::test(Formula::negation(Formula::atom(v))),
                                             Program::assign_false(primed)));
  });
}

}  // namespace argdlpa
