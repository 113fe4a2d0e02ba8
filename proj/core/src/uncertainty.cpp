#include "argdlpa/uncertainty.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "argdlpa/encodings.hpp"
#include "argdlpa/errors.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/programs.hpp"

namespace argdlpa {

namespace {

std::string pair_name(const Attack& a, const Universe& u) {
  return "(" + u.name(a.first) + "," + u.name(a.second) + ")";
}

void require_disjoint(ArgSet a, ArgSet b, const char* what, const Universe& u) {
  ArgSet both = a & b;
  if (!both.empty()) throw InvariantError(std::string(what) + " overlap on " + u.set_string(both));
}

void require_disjoint(const AttackSet& a, const AttackSet& b, const char* what, const Universe& u) {
  for (const auto& p : a) {
    if (b.count(p) != 0) throw InvariantError(std::string(what) + " overlap on " + pair_name(p, u));
  }
}

void require_within(const AttackSet& atts, ArgSet args, const char* what, const Universe& u) {
  for (const auto& p : atts) {
    if (!args.contains(p.first) || !args.contains(p.second)) {
      throw InvariantError(std::string(what) + " attack " + pair_name(p, u) + " leaves the argument set");
    }
  }
}

void require_in_universe(ArgSet s, const Universe& u) {
  if (!s.is_subset_of(u.all())) throw InvariantError("argument outside the universe");
}

void require_symmetric_irreflexive(const AttackSet& sym, const Universe& u) {
  for (const auto& p : sym) {
    if (p.first == p.second) throw InvariantError("symmetric attack " + pair_name(p, u) + " is reflexive");
    if (sym.count({p.second, p.first}) == 0) {
      throw InvariantError("symmetric attacks contain " + pair_name(p, u) + " without its converse");
    }
  }
}

void require_aw_att_constraint(const Formula& f, ArgSet args, const Universe& u) {
  if (!is_boolean(f)) throw InvariantError("constraint must be a Boolean formula");
  for (const auto& v : variables(f)) {
    bool ok = false;
    if (v.kind == VarKind::aw) ok = args.contains(v.first);
    if (v.kind == VarKind::att) ok = args.contains(v.first) && args.contains(v.second);
    if (!ok) {
      std::string name = v.kind == VarKind::aux ? "aux(" + std::to_string(v.first) + ")"
                                                : (v.first < u.size() && v.second < u.size() ? u.var_name(v) : "?");
      throw InvariantError("constraint variable " + name + " is not an aw/att variable of the framework");
    }
  }
}

template <typename F>
void for_each_subset(const std::vector<Attack>& items, std::size_t bound, F&& f) {
  if (items.size() >= 63 || (std::size_t{1} << items.size()) > bound) {
    throw ResourceError("completion enumeration over " + std::to_string(items.size()) +
                        " optional attacks exceeds the configured bound");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    AttackSet chosen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) chosen.insert(items[i]);
    }
    f(chosen);
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

CompletionSet sorted(std::set<ArgFramework> s) { return {s.begin(), s.end()}; }

// Three-valued evaluation over a partial assignment (-1 unknown).
enum class Tri : std::int8_t { no = 0, yes = 1, unknown = 2 };

class KleeneModels {
 public:
  KleeneModels(const Ciaf& c, std::size_t bound) : args_(c.args), constraint_(c.constraint), bound_(bound) {
    vars_ = aw_vars(args_);
    auto atts = att_vars(args_, args_);
    vars_.insert(vars_.end(), atts.begin(), atts.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) local_.emplace(key(vars_[i]), i);
    assign_.assign(vars_.size(), -1);
  }

  CompletionSet run() {
    branch(0);
    return sorted(std::move(out_));
  }

  // True iff some model of the constraint describes g; attack variables with an
  // endpoint outside g stay free.
  bool describes(const ArgFramework& g) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const Var& v = vars_[i];
      if (v.kind == VarKind::aw) {
        assign_[i] = g.args().contains(v.first) ? 1 : 0;
      } else if (g.args().contains(v.first) && g.args().contains(v.second)) {
        assign_[i] = g.attacks(v.first, v.second) ? 1 : 0;
      } else {
        assign_[i] = -1;
      }
    }
    bool found = satisfiable(0);
    assign_.assign(vars_.size(), -1);
    return found;
  }

 private:
  static std::size_t key(const Var& v) { return dense_index(v, kMaxUniverse); }

  Tri value(const Formula& f) const {
    switch (f.kind()) {
      case FormulaKind::atom: {
        auto a = assign_[local_.at(key(f.var()))];
        return a < 0 ? Tri::unknown : (a != 0 ? Tri::yes : Tri::no);
      }
      case FormulaKind::top: return Tri::yes;
      case FormulaKind::bottom: return Tri::no;
      case FormulaKind::negation: {
        Tri t = value(f.operands()[0]);
        return t == Tri::unknown ? t : (t == Tri::yes ? Tri::no : Tri::yes);
      }
      case FormulaKind::conjunction: {
        Tri acc = Tri::yes;
        for (const auto& g : f.operands()) {
          Tri t = value(g);
          if (t == Tri::no) return Tri::no;
          if (t == Tri::unknown) acc = Tri::unknown;
        }
        return acc;
      }
      case FormulaKind::disjunction: {
        Tri acc = Tri::no;
        for (const auto& g : f.operands()) {
          Tri t = value(g);
          if (t == Tri::yes) return Tri::yes;
          if (t == Tri::unknown) acc = Tri::unknown;
        }
        return acc;
      }
      case FormulaKind::implication: {
        Tri a = value(f.operands()[0]);
        Tri b = value(f.operands()[1]);
        if (a == Tri::no || b == Tri::yes) return Tri::yes;
        if (a == Tri::yes && b == Tri::no) return Tri::no;
        return Tri::unknown;
      }
      case FormulaKind::equivalence: {
        Tri a = value(f.operands()[0]);
        Tri b = value(f.operands()[1]);
        if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
        return a == b ? Tri::yes : Tri::no;
      }
      default: throw InvariantError("constraint must be a Boolean formula");
    }
  }

  void branch(std::size_t i) {
    Tri t = value(constraint_);
    if (t == Tri::no) return;
    if (t == Tri::yes) {
      emit(i);
      return;
    }
    assign_[i] = 1;
    branch(i + 1);
    assign_[i] = 0;
    branch(i + 1);
    assign_[i] = -1;
  }

  bool satisfiable(std::size_t i) {
    Tri t = value(constraint_);
    if (t != Tri::unknown) return t == Tri::yes;
    while (assign_[i] >= 0) ++i;
    bool found = false;
    for (std::int8_t b : {1, 0}) {
      assign_[i] = b;
      found = satisfiable(i + 1);
      if (found) break;
    }
    assign_[i] = -1;
    return found;
  }

  // Every AF described by some extension of the current partial assignment.
  void emit(std::size_t first_free) {
    ArgSet aware;
    ArgSet free_aw;
    std::size_t k = 0;
    args_.for_each([&](ArgId x) {
      if (k >= first_free) {
        free_aw.insert(x);
      } else if (assign_[k] == 1) {
        aware.insert(x);
      }
      ++k;
    });
    for_each_subset(free_aw, [&](ArgSet extra) {
      ArgSet a_star = aware | extra;
      AttackSet fixed;
      std::vector<Attack> optional;
      for (std::size_t i = args_.size(); i < vars_.size(); ++i) {
        const Var& v = vars_[i];
        if (!a_star.contains(v.first) || !a_star.contains(v.second)) continue;
        if (i >= first_free) {
          optional.emplace_back(v.first, v.second);
        } else if (assign_[i] == 1) {
          fixed.emplace(v.first, v.second);
        }
      }
      for_each_subset(optional, bound_, [&](const AttackSet& chosen) {
        AttackSet r = fixed;
        r.insert(chosen.begin(), chosen.end());
        out_.emplace(a_star, r);
        if (out_.size() > bound_) throw ResourceError("completion set exceeds the configured bound");
      });
    });
  }

  ArgSet args_;
  Formula constraint_;
  std::size_t bound_;
  std::vector<Var> vars_;
  std::unordered_map<std::size_t, std::size_t> local_;
  std::vector<std::int8_t> assign_;
  std::set<ArgFramework> out_;
};

Valuation aw_att_valuation(ArgSet args, const AttackSet& attacks, std::size_t n) {
  Valuation v;
  args.for_each([&](ArgId x) { v.insert(dense_index(Var::aw(x), n)); });
  for (const auto& [x, y] : attacks) v.insert(dense_index(Var::att(x, y), n));
  return v;
}

}  // namespace

void Iaf::validate(const Universe& u) const {
  require_in_universe(fixed_args | uncertain_args, u);
  require_disjoint(fixed_args, uncertain_args, "fixed and uncertain arguments", u);
  require_disjoint(fixed_attacks, uncertain_attacks, "fixed and uncertain attacks", u);
  require_within(fixed_attacks, fixed_args | uncertain_args, "fixed", u);
  require_within(uncertain_attacks, fixed_args | uncertain_args, "uncertain", u);
}

void Riaf::validate(const Universe& u) const {
  Iaf{fixed_args, fixed_attacks, uncertain_args, uncertain_attacks}.validate(u);
  require_symmetric_irreflexive(sym_attacks, u);
  require_disjoint(sym_attacks, fixed_attacks, "symmetric and fixed attacks", u);
  require_disjoint(sym_attacks, uncertain_attacks, "symmetric and uncertain attacks", u);
  require_within(sym_attacks, fixed_args | uncertain_args, "symmetric", u);
}

void Ciaf::validate(const Universe& u) const {
  require_in_universe(args, u);
  require_aw_att_constraint(constraint, args, u);
}

void CiafJm::validate(const Universe& u) const {
  iaf.validate(u);
  require_aw_att_constraint(constraint, iaf.fixed_args | iaf.uncertain_args, u);
}

bool Dependency::satisfied_by(ArgSet a) const {
  ArgSet ax = a & x;
  switch (kind) {
    case Kind::implies: return !x.is_subset_of(a) || !(a & y).empty();
    case Kind::disjunction: return !ax.empty();
    case Kind::nand: return ax != x;
    case Kind::choice: return ax.size() == 1;
  }
  return false;
}

void DArgIaf::validate(const Universe& u) const {
  require_in_universe(args | uncertain_args, u);
  require_disjoint(args, uncertain_args, "fixed and uncertain arguments", u);
  require_within(attacks, args | uncertain_args, "argument-IAF", u);
  for (const auto& d : deps) {
    if (d.x.empty() || (d.kind == Dependency::Kind::implies && d.y.empty())) {
      throw InvariantError("dependency over an empty argument set");
    }
    if (!(d.x | d.y).is_subset_of(uncertain_args)) {
      throw InvariantError("dependency mentions " + u.set_string((d.x | d.y) - uncertain_args) +
                           " outside the uncertain arguments");
    }
  }
}

Iaf iaf_of_af(const ArgFramework& af) { return {af.args(), af.attacks(), {}, {}}; }

Riaf riaf_of_iaf(const Iaf& iaf) {
  return {iaf.fixed_args, iaf.fixed_attacks, iaf.uncertain_args, iaf.uncertain_attacks, {}};
}

void validate(const Structure& s, const Universe& u) {
  std::visit([&](const auto& x) { x.validate(u); }, s);
}

CompletionSet completions_direct(const Iaf& s, std::size_t bound) {
  std::set<ArgFramework> out;
  for_each_subset(s.uncertain_args, [&](ArgSet extra) {
    ArgSet a_star = s.fixed_args | extra;
    AttackSet lower = restrict_attacks(s.fixed_attacks, a_star);
    AttackSet optional = restrict_attacks(s.uncertain_attacks, a_star);
    for_each_subset(std::vector<Attack>(optional.begin(), optional.end()), bound, [&](const AttackSet& chosen) {
      AttackSet r = lower;
      r.insert(chosen.begin(), chosen.end());
      out.emplace(a_star, r);
    });
  });
  return sorted(std::move(out));
}

CompletionSet completions_direct(const Riaf& s, std::size_t bound) {
  std::set<ArgFramework> out;
  for_each_subset(s.uncertain_args, [&](ArgSet extra) {
    ArgSet a_star = s.fixed_args | extra;
    AttackSet lower = restrict_attacks(s.fixed_attacks, a_star);
    AttackSet sym = restrict_attacks(s.sym_attacks, a_star);
    AttackSet optional = restrict_attacks(s.uncertain_attacks, a_star);
    optional.insert(sym.begin(), sym.end());
    for_each_subset(std::vector<Attack>(optional.begin(), optional.end()), bound, [&](const AttackSet& chosen) {
      AttackSet r = lower;
      r.insert(chosen.begin(), chosen.end());
      bool covered = std::all_of(sym.begin(), sym.end(), [&](const Attack& p) {
        return r.count(p) != 0 || r.count({p.second, p.first}) != 0;
      });
      if (covered) out.emplace(a_star, r);
    });
  });
  return sorted(std::move(out));
}

CompletionSet completions_direct(const Ciaf& s, std::size_t bound) { return KleeneModels(s, bound).run(); }

CompletionSet completions_direct(const CiafJm& s, std::size_t bound) {
  KleeneModels models(Ciaf{s.iaf.fixed_args | s.iaf.uncertain_args, s.constraint}, bound);
  CompletionSet out;
  for (auto& g : completions_direct(s.iaf, bound)) {
    if (models.describes(g)) out.push_back(std::move(g));
  }
  return out;
}

CompletionSet completions_direct(const DArgIaf& s, std::size_t bound) {
  CompletionSet out;
  for (auto& af : completions_direct(Iaf{s.args, s.attacks, s.uncertain_args, {}}, bound)) {
    bool ok = std::all_of(s.deps.begin(), s.deps.end(), [&](const Dependency& d) { return d.satisfied_by(af.args()); });
    if (ok) out.push_back(std::move(af));
  }
  return out;
}

CompletionSet completions_direct(const Structure& s, std::size_t bound) {
  return std::visit([&](const auto& x) { return completions_direct(x, bound); }, s);
}

Valuation valuation_of(const Iaf& s, std::size_t n) { return aw_att_valuation(s.fixed_args, s.fixed_attacks, n); }
Valuation valuation_of(const Riaf& s, std::size_t n) { return aw_att_valuation(s.fixed_args, s.fixed_attacks, n); }
Valuation valuation_of(const Ciaf&, std::size_t) { return {}; }
Valuation valuation_of(const CiafJm& s, std::size_t n) { return valuation_of(s.iaf, n); }
Valuation valuation_of(const DArgIaf& s, std::size_t n) { return aw_att_valuation(s.args, s.attacks, n); }

Valuation valuation_of(const Structure& s, std::size_t n) {
  return std::visit([&](const auto& x) { return valuation_of(x, n); }, s);
}

Program make_comp(const Iaf& s) {
  return Program::sequence(mk_true_some(aw_vars(s.uncertain_args)), mk_true_some(att_vars(s.uncertain_attacks)));
}

Program make_comp(const Riaf& s) {
  return Program::sequence(Program::sequence(mk_true_some(aw_vars(s.uncertain_args)),
                                             mk_true_some(att_vars(s.uncertain_attacks))),
                           dis(s.sym_attacks));
}

Program make_comp(const Ciaf& s) {
  return Program::sequence(Program::sequence(vary(aw_vars(s.args)), vary(att_vars(s.args, s.args))),
                           Program::test(s.constraint));
}

Program make_comp(const CiafJm& s) {
  // Attack variables with an unaware endpoint are invisible in the completion, so the
  // constraint may pick any value for them.
  ArgSet all = s.iaf.fixed_args | s.iaf.uncertain_args;
  Program free_dangling = seq_over(att_vars(all, all), [](const Var& v) {
    Formula both_aware = Formula::conjunction({Formula::atom(Var::aw(v.first)), Formula::atom(Var::aw(v.second))});
    return if_then(Formula::negation(both_aware), vary({v}));
  });
  return Program::sequence(Program::sequence(make_comp(s.iaf), free_dangling), Program::test(s.constraint));
}

Program make_comp(const DArgIaf& s) {
  return Program::sequence(vary(aw_vars(s.uncertain_args)), Program::test(translate_dependencies(s.deps)));
}

Program make_comp(const Structure& s) {
  return std::visit([](const auto& x) { return make_comp(x); }, s);
}

CompletionSet afs_of_successors(const Valuation& start, const Program& program, Evaluator& evaluator) {
  std::set<ArgFramework> out;
  for (const auto& v : evaluator.successors(start, program)) {
    out.insert(af_of_valuation(v, evaluator.universe_size()));
  }
  return sorted(std::move(out));
}

CompletionSet completions_dlpa(const Structure& s, Evaluator& evaluator) {
  return afs_of_successors(valuation_of(s, evaluator.universe_size()), make_comp(s), evaluator);
}

Formula translate_dependencies(const std::vector<Dependency>& deps) {
  auto aw = [](ArgSet s) {
    std::vector<Formula> fs;
    s.for_each([&](ArgId x) { fs.push_back(Formula::atom(Var::aw(x))); });
    return fs;
  };
  std::vector<Formula> parts;
  for (const auto& d : deps) {
    switch (d.kind) {
      case Dependency::Kind::implies:
        parts.push_back(Formula::implication(Formula::conjunction(aw(d.x)), Formula::disjunction(aw(d.y))));
        break;
      case Dependency::Kind::disjunction: parts.push_back(Formula::disjunction(aw(d.x))); break;
      case Dependency::Kind::nand: parts.push_back(Formula::negation(Formula::conjunction(aw(d.x)))); break;
      case Dependency::Kind::choice: {
        std::vector<Formula> exactly_one;
        auto members = d.x.members();
        for (ArgId chosen : members) {
          std::vector<Formula> lits;
          for (ArgId x : members) {
            Formula a = Formula::atom(Var::aw(x));
            lits.push_back(x == chosen ? a : Formula::negation(a));
          }
          exactly_one.push_back(Formula::conjunction(std::move(lits)));
        }
        parts.push_back(Formula::disjunction(std::move(exactly_one)));
        break;
      }
    }
  }
  return Formula::conjunction(std::move(parts));
}

namespace {

Formula literal_theory(ArgSet args, const AttackSet& attacks, std::size_t n) {
  std::vector<Formula> lits;
  for (ArgId x = 0; x < n; ++x) {
    Formula a = Formula::atom(Var::aw(x));
    lits.push_back(args.contains(x) ? a : Formula::negation(a));
  }
  for (ArgId x = 0; x < n; ++x) {
    for (ArgId y = 0; y < n; ++y) {
      Formula a = Formula::atom(Var::att(x, y));
      lits.push_back(attacks.count({x, y}) != 0 ? a : Formula::negation(a));
    }
  }
  return Formula::conjunction(std::move(lits));
}

}  // namespace

Formula theory_of_af(const ArgFramework& af, std::size_t n) { return literal_theory(af.args(), af.attacks(), n); }

Formula theory_of_iaf(const Iaf& iaf, std::size_t n) {
  return literal_theory(iaf.fixed_args, iaf.fixed_attacks, n);
}

Ciaf ciaf_from_completion_set(const CompletionSet& graphs, std::size_t n) {
  std::vector<Formula> theories;
  for (const auto& g : graphs) theories.push_back(theory_of_af(g, n));
  return {ArgSet::first_n(n), Formula::disjunction(std::move(theories))};
}

std::optional<Riaf> find_expressing_riaf(const CompletionSet& target, std::size_t n, bool iaf_only) {
  // Arguments: absent / fixed / uncertain. Unordered pairs {x,y}, x<y: symmetric, or each
  // direction absent / fixed / uncertain. Self-attacks: absent / fixed / uncertain.
  std::vector<std::pair<ArgId, ArgId>> pairs;
  for (ArgId x = 0; x < n; ++x) {
    for (ArgId y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  std::size_t arg_combos = 1;
  for (std::size_t i = 0; i < n; ++i) arg_combos *= 3;
  const std::size_t pair_choices = iaf_only ? 9 : 10;
  std::size_t att_combos = 1;
  for (std::size_t i = 0; i < n; ++i) att_combos *= 3;
  for (std::size_t i = 0; i < pairs.size(); ++i) att_combos *= pair_choices;

  Universe names = Universe::letters(n);
  for (std::size_t ac = 0; ac < arg_combos; ++ac) {
    Riaf r;
    std::size_t code = ac;
    for (ArgId x = 0; x < n; ++x, code /= 3) {
      if (code % 3 == 1) r.fixed_args.insert(x);
      if (code % 3 == 2) r.uncertain_args.insert(x);
    }
    for (std::size_t tc = 0; tc < att_combos; ++tc) {
      Riaf cand = r;
      std::size_t c = tc;
      auto place = [&](Attack a, std::size_t choice) {
        if (choice == 1) cand.fixed_attacks.insert(a);
        if (choice == 2) cand.uncertain_attacks.insert(a);
      };
      for (ArgId x = 0; x < n; ++x, c /= 3) place({x, x}, c % 3);
      for (const auto& [x, y] : pairs) {
        std::size_t choice = c % pair_choices;
        c /= pair_choices;
        if (choice == 9) {
          cand.sym_attacks.insert({x, y});
          cand.sym_attacks.insert({y, x});
        } else {
          place({x, y}, choice % 3);
          place({y, x}, choice / 3);
        }
      }
      try {
        cand.validate(names);
      } catch (const InvariantError&) {
        continue;
      }
      if (completions_direct(cand) == target) return cand;
    }
  }
  return std::nullopt;
}

Ciaf one_way_attack_ciaf() {
  const ArgId a = 0;
  const ArgId b = 1;
  auto att = [](ArgId x, ArgId y) { return Formula::atom(Var::att(x, y)); };
  Formula phi = Formula::conjunction({
      Formula::atom(Var::aw(a)),
      Formula::atom(Var::aw(b)),
      Formula::disjunction({att(a, b), att(b, a)}),
      Formula::negation(Formula::conjunction({att(a, b), att(b, a)})),
      Formula::negation(att(a, a)),
      Formula::negation(att(b, b)),
  });
  return {ArgSet{a, b}, phi};
}

bool riaf_inexpressibility_check() {
  CompletionSet target = completions_direct(one_way_attack_ciaf());
  return !find_expressing_riaf(target, 2).has_value();
}

}  // namespace argdlpa
