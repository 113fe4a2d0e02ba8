#include "argdlpa/random.hpp"

namespace argdlpa {

ArgSet Random::subset(ArgSet of, std::uint64_t num, std::uint64_t den) {
  ArgSet out;
  of.for_each([&](ArgId x) {
    if (chance(num, den)) out.insert(x);
  });
  return out;
}

namespace {

std::vector<Var> aw_att_vars(ArgSet args) {
  std::vector<Var> vs = aw_vars(args);
  for (const auto& v : att_vars(args, args)) vs.push_back(v);
  return vs;
}

ArgSet nonempty_subset(ArgSet of, Random& rng) {
  ArgSet s = rng.subset(of, 2, 3);
  if (s.empty()) {
    auto m = of.members();
    s.insert(m[rng.below(m.size())]);
  }
  return s;
}

// Splits 0..n-1 into fixed (non-empty), uncertain and absent arguments.
std::pair<ArgSet, ArgSet> split_args(std::size_t n, Random& rng) {
  ArgSet fixed, uncertain;
  for (ArgId x = 0; x < n; ++x) {
    auto r = rng.below(10);
    if (r < 5) {
      fixed.insert(x);
    } else if (r < 8) {
      uncertain.insert(x);
    }
  }
  if (fixed.empty()) {
    ArgId x = static_cast<ArgId>(rng.below(n));
    uncertain.erase(x);
    fixed.insert(x);
  }
  return {fixed, uncertain};
}

}  // namespace

ArgFramework random_af(ArgSet args, Random& rng) {
  std::uint64_t density = 1 + rng.below(3);
  AttackSet atts;
  args.for_each([&](ArgId x) {
    args.for_each([&](ArgId y) {
      if (rng.chance(density, 6)) atts.insert({x, y});
    });
  });
  return {args, atts};
}

Iaf random_iaf(std::size_t n, Random& rng) {
  auto [fixed, uncertain] = split_args(n, rng);
  ArgSet all = fixed | uncertain;
  Iaf out{fixed, {}, uncertain, {}};
  all.for_each([&](ArgId x) {
    all.for_each([&](ArgId y) {
      auto r = rng.below(8);
      if (r < 2) {
        out.fixed_attacks.insert({x, y});
      } else if (r < 4) {
        out.uncertain_attacks.insert({x, y});
      }
    });
  });
  return out;
}

Riaf random_riaf(std::size_t n, Random& rng) {
  Iaf base = random_iaf(n, rng);
  Riaf out = riaf_of_iaf(base);
  ArgSet all = base.fixed_args | base.uncertain_args;
  all.for_each([&](ArgId x) {
    all.for_each([&](ArgId y) {
      if (x >= y || !rng.chance(1, 4)) return;
      out.fixed_attacks.erase({x, y});
      out.fixed_attacks.erase({y, x});
      out.uncertain_attacks.erase({x, y});
      out.uncertain_attacks.erase({y, x});
      out.sym_attacks.insert({x, y});
      out.sym_attacks.insert({y, x});
    });
  });
  return out;
}

Formula random_boolean_formula(const std::vector<Var>& vars, std::size_t depth, Random& rng) {
  if (depth == 0 || vars.empty() || rng.chance(1, 4)) {
    if (vars.empty() || rng.chance(1, 12)) return rng.chance(1, 2) ? Formula::top() : Formula::bottom();
    return Formula::atom(rng.pick(vars));
  }
  switch (rng.below(5)) {
    case 0: return Formula::negation(random_boolean_formula(vars, depth - 1, rng));
    case 1:
      return Formula::conjunction(
          {random_boolean_formula(vars, depth - 1, rng), random_boolean_formula(vars, depth - 1, rng)});
    case 2:
      return Formula::disjunction(
          {random_boolean_formula(vars, depth - 1, rng), random_boolean_formula(vars, depth - 1, rng)});
    case 3:
      return Formula::implication(random_boolean_formula(vars, depth - 1, rng),
                                  random_boolean_formula(vars, depth - 1, rng));
    default:
      return Formula::equivalence(random_boolean_formula(vars, depth - 1, rng),
                                  random_boolean_formula(vars, depth - 1, rng));
  }
}

Ciaf random_ciaf(std::size_t n, Random& rng) {
  ArgSet args = nonempty_subset(ArgSet::first_n(n), rng);
  return {args, random_boolean_formula(aw_att_vars(args), 3, rng)};
}

CiafJm random_ciafjm(std::size_t n, Random& rng) {
  Iaf iaf = random_iaf(n, rng);
  return {iaf, random_boolean_formula(aw_att_vars(iaf.fixed_args | iaf.uncertain_args), 3, rng)};
}

DArgIaf random_dargiaf(std::size_t n, Random& rng) {
  auto [fixed, uncertain] = split_args(n, rng);
  DArgIaf out{fixed, uncertain, random_af(fixed | uncertain, rng).attacks(), {}};
  if (uncertain.empty()) return out;
  auto count = rng.below(3);
  for (std::uint64_t i = 0; i < count; ++i) {
    Dependency d;
    d.kind = static_cast<Dependency::Kind>(rng.below(4));
    d.x = nonempty_subset(uncertain, rng);
    if (d.kind == Dependency::Kind::implies) d.y = nonempty_subset(uncertain, rng);
    out.deps.push_back(d);
  }
  return out;
}

Structure random_structure(std::size_t kind_index, std::size_t n, Random& rng) {
  switch (kind_index % 5) {
    case 0: return random_iaf(n, rng);
    case 1: return random_riaf(n, rng);
    case 2: return random_ciaf(n, rng);
    case 3: return random_ciafjm(n, rng);
    default: return random_dargiaf(n, rng);
  }
}

namespace {

AttackSet random_control_attacks(ArgSet control, ArgSet all, const std::function<bool(Attack)>& taken,
                                 Random& rng) {
  AttackSet out;
  all.for_each([&](ArgId x) {
    all.for_each([&](ArgId y) {
      if (!control.contains(x) && !control.contains(y)) return;
      if (taken({x, y}) || !rng.chance(1, 3)) return;
      out.insert({x, y});
    });
  });
  return out;
}

}  // namespace

Caf random_caf(std::size_t n, Random& rng) {
  Riaf base = random_riaf(n, rng);
  ArgSet rest = ArgSet::first_n(n) - (base.fixed_args | base.uncertain_args);
  ArgSet control = rng.subset(rest, 2, 3);
  ArgSet all = base.fixed_args | base.uncertain_args | control;
  AttackSet catt = random_control_attacks(
      control, all,
      [&](Attack a) {
        return base.fixed_attacks.count(a) || base.uncertain_attacks.count(a) || base.sym_attacks.count(a);
      },
      rng);
  return {base.fixed_args,    base.fixed_attacks, base.uncertain_args, base.uncertain_attacks,
          base.sym_attacks, control,            catt};
}

Cciaf random_cciaf(std::size_t n, Random& rng) {
  ArgSet all = ArgSet::first_n(n);
  ArgSet control = rng.subset(all, 1, 3);
  if (control == all) control.erase(0);
  ArgSet statics = nonempty_subset(all - control, rng);
  AttackSet catt = random_control_attacks(control, control | statics, [](Attack) { return false; }, rng);
  return {control, catt, statics, random_boolean_formula(aw_att_vars(statics), 3, rng)};
}

Formula random_formula(const std::vector<Var>& vars, std::size_t depth, Random& rng) {
  if (depth == 0 || rng.chance(1, 5)) {
    if (rng.chance(1, 10)) return rng.chance(1, 2) ? Formula::top() : Formula::bottom();
    return Formula::atom(rng.pick(vars));
  }
  switch (rng.below(7)) {
    case 0: return Formula::negation(random_formula(vars, depth - 1, rng));
    case 1: return Formula::conjunction({random_formula(vars, depth - 1, rng), random_formula(vars, depth - 1, rng)});
    case 2: return Formula::disjunction({random_formula(vars, depth - 1, rng), random_formula(vars, depth - 1, rng)});
    case 3:
      return Formula::implication(random_formula(vars, depth - 1, rng), random_formula(vars, depth - 1, rng));
    case 4:
      return Formula::equivalence(random_formula(vars, depth - 1, rng), random_formula(vars, depth - 1, rng));
    case 5: return Formula::box(random_program(vars, depth - 1, rng), random_formula(vars, depth - 1, rng));
    default: return Formula::diamond(random_program(vars, depth - 1, rng), random_formula(vars, depth - 1, rng));
  }
}

Program random_program(const std::vector<Var>& vars, std::size_t depth, Random& rng) {
  if (depth == 0 || rng.chance(1, 4)) {
    switch (rng.below(3)) {
      case 0: return Program::assign_true(rng.pick(vars));
      case 1: return Program::assign_false(rng.pick(vars));
      default: return Program::test(random_formula(vars, 0, rng));
    }
  }
  switch (rng.below(4)) {
    case 0: return Program::sequence(random_program(vars, depth - 1, rng), random_program(vars, depth - 1, rng));
    case 1: return Program::choice(random_program(vars, depth - 1, rng), random_program(vars, depth - 1, rng));
    case 2: return Program::converse(random_program(vars, depth - 1, rng));
    default: return Program::test(random_formula(vars, depth - 1, rng));
  }
}

}  // namespace argdlpa
