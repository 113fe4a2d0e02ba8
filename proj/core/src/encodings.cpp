#include "argdlpa/encodings.hpp"

#include <algorithm>

#include "argdlpa/errors.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/programs.hpp"

namespace argdlpa {

Valuation valuation_of_af(const ArgFramework& af, std::size_t n) {
  Valuation v;
  af.args().for_each([&](ArgId x) { v.insert(dense_index(Var::aw(x), n)); });
  for (const auto& [x, y] : af.attacks()) v.insert(dense_index(Var::att(x, y), n));
  return v;
}

ArgFramework af_of_valuation(const Valuation& v, std::size_t n) {
  ArgSet args;
  for (std::size_t x = 0; x < n; ++x) {
    if (v.contains(dense_index(Var::aw(static_cast<ArgId>(x)), n))) args.insert(static_cast<ArgId>(x));
  }
  AttackSet attacks;
  args.for_each([&](ArgId x) {
    args.for_each([&](ArgId y) {
      if (v.contains(dense_index(Var::att(x, y), n))) attacks.emplace(x, y);
    });
  });
  return {args, attacks};
}

ArgSet ext_of_valuation(const Valuation& v, std::size_t n) {
  ArgSet e;
  for (std::size_t x = 0; x < n; ++x) {
    if (v.contains(dense_index(Var::in(static_cast<ArgId>(x)), n))) e.insert(static_cast<ArgId>(x));
  }
  return e;
}

ArgSet primed_ext_of_valuation(const Valuation& v, std::size_t n) {
  ArgSet e;
  for (std::size_t x = 0; x < n; ++x) {
    if (v.contains(dense_index(Var::in_prime(static_cast<ArgId>(x)), n))) e.insert(static_cast<ArgId>(x));
  }
  return e;
}

Valuation valuation_of_vars(const std::vector<Var>& vars, std::size_t n) {
  Valuation v;
  for (const auto& var : vars) v.insert(dense_index(var, n));
  return v;
}

namespace {

Formula atom(Var v) { return Formula::atom(v); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }
Formula conj(std::vector<Formula> fs) { return Formula::conjunction(std::move(fs)); }
Formula disj(std::vector<Formula> fs) { return Formula::disjunction(std::move(fs)); }
Formula implies(Formula a, Formula b) { return Formula::implication(std::move(a), std::move(b)); }

}  // namespace

EncodingContext::EncodingContext(std::size_t n) : n_(n) {
  const auto ids = ArgSet::first_n(n).members();
  const auto in_u = in_vars(ArgSet::first_n(n));

  auto per_arg = [&](auto&& body) {
    std::vector<Formula> fs;
    for (ArgId x : ids) fs.push_back(body(x));
    return conj(std::move(fs));
  };
  auto some_arg = [&](auto&& body) {
    std::vector<Formula> fs;
    for (ArgId x : ids) fs.push_back(body(x));
    return disj(std::move(fs));
  };

  // Some in-argument attacks x, with in or in' as the membership variable.
  auto attacked_by_in = [&](ArgId x, bool primed) {
    return some_arg([&](ArgId y) {
      return conj({atom(primed ? Var::in_prime(y) : Var::in(y)), atom(Var::att(y, x))});
    });
  };
  // Every aware attacker of x is attacked by the current in-set.
  auto defended = [&](ArgId x) {
    return per_arg([&](ArgId y) {
      return implies(conj({atom(Var::aw(y)), atom(Var::att(y, x))}), attacked_by_in(y, false));
    });
  };
  auto in_range = [&](ArgId x, bool primed) {
    return disj({atom(primed ? Var::in_prime(x) : Var::in(x)), conj({atom(Var::aw(x)), attacked_by_in(x, primed)})});
  };

  well_ = per_arg([&](ArgId x) { return implies(atom(Var::in(x)), atom(Var::aw(x))); });

  std::vector<Formula> cf{well_};
  for (ArgId x : ids) {
    for (ArgId y : ids) cf.push_back(neg(conj({atom(Var::in(x)), atom(Var::in(y)), atom(Var::att(x, y))})));
  }
  conflict_free_ = conj(std::move(cf));

  admissible_ = conj({conflict_free_, per_arg([&](ArgId x) { return implies(atom(Var::in(x)), defended(x)); })});

  stable_ = conj({well_, per_arg([&](ArgId x) {
                    return implies(atom(Var::aw(x)),
                                   Formula::equivalence(atom(Var::in(x)), neg(attacked_by_in(x, false))));
                  })});

  // Guarded by aw(x): an unaware argument cannot be in, even when vacuously defended.
  complete_ = conj({conflict_free_, per_arg([&](ArgId x) {
                      return implies(atom(Var::aw(x)), Formula::equivalence(atom(Var::in(x)), defended(x)));
                    })});

  const Program shrink = Program::sequence(mk_false_one(in_u), mk_false_some(in_u));
  const Program grow = Program::sequence(mk_true_one(in_u), mk_true_some(in_u));
  const Program vary_in = vary(in_u);

  grounded_ = conj({complete_, Formula::box(shrink, neg(complete_))});
  preferred_ = conj({admissible_, Formula::box(grow, neg(admissible_))});
  naive_ = conj({conflict_free_, Formula::box(mk_true_one(in_u), neg(conflict_free_))});

  included_in_cp_ = per_arg([&](ArgId x) { return implies(in_range(x, false), in_range(x, true)); });
  includes_cp_ = per_arg([&](ArgId x) { return implies(in_range(x, true), in_range(x, false)); });
  copy_ = copy_in(ArgSet::first_n(n));

  auto ext_program = [&](const Formula& phi) { return Program::sequence(vary_in, Program::test(phi)); };
  const Formula range_max = implies(includes_cp_, included_in_cp_);

  semi_stable_ = conj({complete_, Formula::box(Program::sequence(copy_, ext_program(complete_)), range_max)});
  stage_ = conj({conflict_free_, Formula::box(Program::sequence(copy_, ext_program(conflict_free_)), range_max)});

  const Program make_pr = ext_program(preferred_);
  const Program make_se = ext_program(semi_stable_);
  ideal_set_ = conj({admissible_, per_arg([&](ArgId x) {
                       return implies(atom(Var::in(x)), Formula::box(make_pr, atom(Var::in(x))));
                     })});
  ideal_ = conj({ideal_set_, Formula::box(grow, neg(ideal_set_))});
  eager_set_ = conj({admissible_, per_arg([&](ArgId x) {
                       return implies(atom(Var::in(x)), Formula::box(make_se, atom(Var::in(x))));
                     })});
  eager_ = conj({eager_set_, Formula::box(grow, neg(eager_set_))});

  for (std::size_t i = 0; i < kAllSemantics.size(); ++i) {
    Semantics s = kAllSemantics[i];
    if (s == Semantics::preferred) {
      make_ext_[i] = make_pr;
    } else if (s == Semantics::semi_stable) {
      make_ext_[i] = make_se;
    } else {
      make_ext_[i] = ext_program(formula(s));
    }
  }
}

const Formula& EncodingContext::formula(Semantics s) const {
  switch (s) {
    case Semantics::stable: return stable_;
    case Semantics::complete: return complete_;
    case Semantics::grounded: return grounded_;
    case Semantics::preferred: return preferred_;
    case Semantics::semi_stable: return semi_stable_;
    case Semantics::ideal: return ideal_;
    case Semantics::eager: return eager_;
    case Semantics::naive: return naive_;
    case Semantics::stage: return stage_;
  }
  return stable_;
}

const Program& EncodingContext::make_ext(Semantics s) const {
  auto it = std::find(kAllSemantics.begin(), kAllSemantics.end(), s);
  return make_ext_[static_cast<std::size_t>(it - kAllSemantics.begin())];
}

std::size_t EncodingBounds::for_semantics(Semantics s) const {
  switch (s) {
    case Semantics::semi_stable:
    case Semantics::stage: return range_based;
    case Semantics::ideal:
    case Semantics::eager: return nested;
    default: return basic;
  }
}

std::vector<ArgSet> encoded_extensions(const ArgFramework& af, Semantics s, const EncodingContext& ctx,
                                       Evaluator& evaluator) {
  std::vector<ArgSet> out;
  for (const auto& v : evaluator.successors(valuation_of_af(af, ctx.universe_size()), ctx.make_ext(s))) {
    out.push_back(ext_of_valuation(v, ctx.universe_size()));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EncodingReport check_encoding(const ArgFramework& af, Semantics s, std::size_t universe_size,
                              const EncodingBounds& bounds) {
  std::size_t bound = bounds.for_semantics(s);
  if (universe_size > bound) {
    throw ResourceError("universe of " + std::to_string(universe_size) + " arguments exceeds the " +
                        std::string(to_string(s)) + " encoding bound of " + std::to_string(bound));
  }
  EncodingContext ctx(universe_size);
  Evaluator evaluator(universe_size);
  EncodingReport report;
  report.oracle = extensions(af, s);
  report.encoding = encoded_extensions(af, s, ctx, evaluator);
  report.agrees = report.oracle == report.encoding;
  return report;
}

}  // namespace argdlpa
