#include "argdlpa/control.hpp"

#include <algorithm>
#include <set>

#include "argdlpa/encodings.hpp"
#include "argdlpa/errors.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/programs.hpp"

namespace argdlpa {

namespace {

std::string pair_name(const Attack& a, const Universe& u) {
  return "(" + u.name(a.first) + "," + u.name(a.second) + ")";
}

void require_pairwise_disjoint(const std::vector<std::pair<const AttackSet*, const char*>>& rels, const Universe& u) {
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (std::size_t j = i + 1; j < rels.size(); ++j) {
      for (const auto& p : *rels[i].first) {
        if (rels[j].first->count(p) != 0) {
          throw InvariantError(std::string(rels[i].second) + " and " + rels[j].second + " attacks overlap on " +
                               pair_name(p, u));
        }
      }
    }
  }
}

void require_touches(const AttackSet& atts, ArgSet control, ArgSet all, const Universe& u) {
  for (const auto& p : atts) {
    bool inside = all.contains(p.first) && all.contains(p.second);
    bool touches = control.contains(p.first) || control.contains(p.second);
    if (!inside || !touches) {
      throw InvariantError("control attack " + pair_name(p, u) + " must involve a control argument");
    }
  }
}

template <typename F>
void for_each_subset(ArgSet base, F&& f) {
  std::uint64_t all = base.bits();
  std::uint64_t s = 0;
  while (true) {
    f(ArgSet(s));
    if (s == all) break;
    s = (s - all) & all;
  }
}

void require_cfg(ArgSet control, const ControlConfiguration& cfg) {
  if (!cfg.chosen.is_subset_of(control)) throw DomainError("configuration contains non-control arguments");
}

void require_constraint_formula(const Formula& phi) {
  if (!is_boolean(phi)) throw DomainError("structural constraint must be Boolean");
  for (const auto& v : variables(phi)) {
    if (v.kind != VarKind::aw && v.kind != VarKind::att) {
      throw DomainError("structural constraint may only mention aw and att variables");
    }
  }
}

}  // namespace

void Caf::validate(const Universe& u) const {
  Riaf{fixed_args, fixed_attacks, uncertain_args, uncertain_attacks, sym_attacks}.validate(u);
  if (!control_args.is_subset_of(u.all())) throw InvariantError("argument outside the universe");
  ArgSet overlap = control_args & (fixed_args | uncertain_args);
  if (!overlap.empty()) throw InvariantError("control arguments overlap other arguments on " + u.set_string(overlap));
  require_pairwise_disjoint({{&fixed_attacks, "fixed"},
                             {&uncertain_attacks, "uncertain"},
                             {&sym_attacks, "symmetric"},
                             {&control_attacks, "control"}},
                            u);
  require_touches(control_attacks, control_args, fixed_args | uncertain_args | control_args, u);
}

void Cciaf::validate(const Universe& u) const {
  if (!(control_args | static_args).is_subset_of(u.all())) throw InvariantError("argument outside the universe");
  ArgSet overlap = control_args & static_args;
  if (!overlap.empty()) throw InvariantError("control and static arguments overlap on " + u.set_string(overlap));
  require_touches(control_attacks, control_args, control_args | static_args, u);
  Ciaf{static_args, constraint}.validate(u);
}

void validate(const Control& c, const Universe& u) {
  std::visit([&](const auto& x) { x.validate(u); }, c);
}

ArgSet control_args(const Control& c) {
  return std::visit([](const auto& x) { return x.control_args; }, c);
}

std::vector<ControlConfiguration> configurations(const Control& c) {
  std::vector<ArgSet> sets;
  for_each_subset(control_args(c), [&](ArgSet s) { sets.push_back(s); });
  std::sort(sets.begin(), sets.end(), canonical_less);
  std::vector<ControlConfiguration> out;
  for (ArgSet s : sets) out.push_back({s});
  return out;
}

Caf under_configuration(const Caf& caf, const ControlConfiguration& cfg) {
  require_cfg(caf.control_args, cfg);
  Caf out = caf;
  out.control_args = cfg.chosen;
  out.control_attacks = restrict_attacks(caf.control_attacks, caf.fixed_args | caf.uncertain_args | cfg.chosen);
  return out;
}

Cciaf under_configuration(const Cciaf& c, const ControlConfiguration& cfg) {
  require_cfg(c.control_args, cfg);
  Cciaf out = c;
  out.control_args = cfg.chosen;
  out.control_attacks = restrict_attacks(c.control_attacks, cfg.chosen | c.static_args);
  return out;
}

Control under_configuration(const Control& c, const ControlConfiguration& cfg) {
  return std::visit([&](const auto& x) -> Control { return under_configuration(x, cfg); }, c);
}

CompletionSet completions_direct(const Caf& caf, std::size_t bound) {
  std::set<ArgFramework> out;
  for_each_subset(caf.uncertain_args, [&](ArgSet extra) {
    ArgSet a_star = caf.fixed_args | caf.control_args | extra;
    AttackSet lower = restrict_attacks(caf.fixed_attacks, a_star);
    AttackSet control = restrict_attacks(caf.control_attacks, a_star);
    lower.insert(control.begin(), control.end());
    AttackSet sym = restrict_attacks(caf.sym_attacks, a_star);
    AttackSet optional = restrict_attacks(caf.uncertain_attacks, a_star);
    optional.insert(sym.begin(), sym.end());
    std::vector<Attack> items(optional.begin(), optional.end());
    if (items.size() >= 63 || (std::size_t{1} << items.size()) > bound) {
      throw ResourceError("completion enumeration exceeds the configured bound");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
      AttackSet r = lower;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if ((mask >> i) & 1U) r.insert(items[i]);
      }
      bool covered = std::all_of(sym.begin(), sym.end(), [&](const Attack& p) {
        return r.count(p) != 0 || r.count({p.second, p.first}) != 0;
      });
      if (covered) out.emplace(a_star, r);
    }
  });
  return {out.begin(), out.end()};
}

CompletionSet completions_direct(const Cciaf& c, std::size_t bound) {
  std::set<ArgFramework> out;
  for (const auto& base : completions_direct(Ciaf{c.static_args, c.constraint}, bound)) {
    ArgSet a_star = c.control_args | base.args();
    AttackSet r = c.control_attacks;
    r.insert(base.attacks().begin(), base.attacks().end());
    out.emplace(a_star, r);
  }
  return {out.begin(), out.end()};
}

CompletionSet completions_direct(const Control& c, std::size_t bound) {
  return std::visit([&](const auto& x) { return completions_direct(x, bound); }, c);
}

CompletionSet completions_any_configuration(const Control& c) {
  std::set<ArgFramework> out;
  for (const auto& cfg : configurations(c)) {
    for (auto& af : completions_direct(under_configuration(c, cfg))) out.insert(std::move(af));
  }
  return {out.begin(), out.end()};
}

Valuation valuation_of(const Caf& caf, std::size_t n) {
  Valuation v = valuation_of_vars(aw_vars(caf.fixed_args), n);
  for (const auto& [x, y] : caf.fixed_attacks) v.insert(dense_index(Var::att(x, y), n));
  for (const auto& [x, y] : caf.control_attacks) v.insert(dense_index(Var::att(x, y), n));
  return v;
}

Valuation valuation_of(const Cciaf& c, std::size_t n) { return valuation_of_vars(att_vars(c.control_attacks), n); }

Valuation valuation_of(const Control& c, std::size_t n) {
  return std::visit([&](const auto& x) { return valuation_of(x, n); }, c);
}

Program control_program(const Control& c) { return mk_true_some(aw_vars(control_args(c))); }

Program make_comp(const Caf& caf) {
  return make_comp(Riaf{caf.fixed_args, caf.fixed_attacks, caf.uncertain_args, caf.uncertain_attacks, caf.sym_attacks});
}

Program make_comp(const Cciaf& c) { return make_comp(Ciaf{c.static_args, c.constraint}); }

Program make_comp(const Control& c) {
  return std::visit([](const auto& x) { return make_comp(x); }, c);
}

Riaf merged_riaf(const Caf& caf) {
  AttackSet fixed = caf.fixed_attacks;
  fixed.insert(caf.control_attacks.begin(), caf.control_attacks.end());
  return {caf.fixed_args | caf.control_args, fixed, caf.uncertain_args, caf.uncertain_attacks, caf.sym_attacks};
}

Iaf settle(const Iaf& iaf, ArgId a) {
  if (!iaf.uncertain_args.contains(a)) throw DomainError("settled argument must be uncertain");
  Iaf out = iaf;
  out.fixed_args.insert(a);
  out.uncertain_args.erase(a);
  return out;
}

CompletionSet settle_completions_dlpa(const Iaf& iaf, ArgId a, Evaluator& evaluator) {
  if (!iaf.uncertain_args.contains(a)) throw DomainError("settled argument must be uncertain");
  Program p = Program::sequence(make_comp(iaf), Program::assign_true(Var::aw(a)));
  return afs_of_successors(valuation_of(iaf, evaluator.universe_size()), p, evaluator);
}

CompletionSet completions_direct(const ConstraintTarget& t) {
  return std::visit(
      [](const auto& x) -> CompletionSet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConfiguredControl>) {
          return completions_direct(under_configuration(x.control, x.cfg));
        } else {
          return completions_direct(x);
        }
      },
      t);
}

CompletionProgram completion_program(const ConstraintTarget& t, std::size_t n) {
  return std::visit(
      [&](const auto& x) -> CompletionProgram {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConfiguredControl>) {
          Control under = under_configuration(x.control, x.cfg);
          Valuation start = valuation_of(under, n) | valuation_of_vars(aw_vars(x.cfg.chosen), n);
          return {start, make_comp(under)};
        } else {
          return {valuation_of(x, n), make_comp(x)};
        }
      },
      t);
}

Formula guard_attacks(const Formula& phi) {
  switch (phi.kind()) {
    case FormulaKind::atom: {
      const Var& v = phi.var();
      if (v.kind != VarKind::att) return phi;
      return Formula::conjunction({Formula::atom(Var::aw(v.first)), Formula::atom(Var::aw(v.second)), phi});
    }
    case FormulaKind::top:
    case FormulaKind::bottom: return phi;
    case FormulaKind::negation: return Formula::negation(guard_attacks(phi.operands()[0]));
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      std::vector<Formula> ops;
      for (const auto& g : phi.operands()) ops.push_back(guard_attacks(g));
      return phi.kind() == FormulaKind::conjunction ? Formula::conjunction(std::move(ops))
                                                    : Formula::disjunction(std::move(ops));
    }
    case FormulaKind::implication:
      return Formula::implication(guard_attacks(phi.operands()[0]), guard_attacks(phi.operands()[1]));
    case FormulaKind::equivalence:
      return Formula::equivalence(guard_attacks(phi.operands()[0]), guard_attacks(phi.operands()[1]));
    case FormulaKind::box:
    case FormulaKind::diamond: break;
  }
  throw DomainError("structural constraint must be Boolean");
}

bool check_structural_constraint(const ConstraintTarget& t, const Formula& phi, ConstraintMode mode, std::size_t n) {
  require_constraint_formula(phi);
  auto cp = completion_program(t, n);
  Formula guarded = guard_attacks(phi);
  Formula query = mode == ConstraintMode::possible ? Formula::diamond(cp.program, guarded)
                                                   : Formula::box(cp.program, guarded);
  Evaluator evaluator(n);
  return evaluator.eval(cp.start, query);
}

bool check_structural_constraint_direct(const ConstraintTarget& t, const Formula& phi, ConstraintMode mode,
                                        std::size_t n) {
  require_constraint_formula(phi);
  Evaluator evaluator(n);
  auto holds = [&](const ArgFramework& af) { return evaluator.eval(valuation_of_af(af, n), phi); };
  auto comps = completions_direct(t);
  return mode == ConstraintMode::possible ? std::any_of(comps.begin(), comps.end(), holds)
                                          : std::all_of(comps.begin(), comps.end(), holds);
}

bool check_enforcement(const Iaf& iaf, ArgId a, const Formula& phi, ConstraintMode mode, std::size_t n) {
  require_constraint_formula(phi);
  if (!iaf.uncertain_args.contains(a)) throw DomainError("enforced argument must be uncertain");
  Program p = Program::sequence(make_comp(iaf), Program::assign_true(Var::aw(a)));
  Formula guarded = guard_attacks(phi);
  Formula query = mode == ConstraintMode::possible ? Formula::diamond(p, guarded) : Formula::box(p, guarded);
  Evaluator evaluator(n);
  return evaluator.eval(valuation_of(iaf, n), query);
}

bool check_enforcement_direct(const Iaf& iaf, ArgId a, const Formula& phi, ConstraintMode mode, std::size_t n) {
  return check_structural_constraint_direct(settle(iaf, a), phi, mode, n);
}

}  // namespace argdlpa
