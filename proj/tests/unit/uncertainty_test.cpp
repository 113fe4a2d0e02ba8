#include <gtest/gtest.h>

#include "argdlpa/encodings.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/framework_file.hpp"
#include "argdlpa/random.hpp"
#include "argdlpa/uncertainty.hpp"
#include "paths.hpp"

namespace argdlpa {
namespace {

using testing::fixture;

Structure load_structure(const std::string& name) { return as_structure(load_framework(fixture(name))); }

std::size_t universe_of(const std::string& name) { return load_framework(fixture(name)).universe.size(); }

TEST(Completions, WorkedCounts) {
  EXPECT_EQ(completions_direct(load_structure("iaf0.iaf")).size(), 10U);
  EXPECT_EQ(completions_direct(load_structure("riaf0.iaf")).size(), 16U);
  EXPECT_EQ(completions_direct(Ciaf{ArgSet{0}, Formula::negation(Formula::atom(Var::aw(0)))}),
            CompletionSet{ArgFramework{}});
}

TEST(Completions, OneWayAttackCiaf) {
  CompletionSet want = {ArgFramework(ArgSet{0, 1}, {{0, 1}}), ArgFramework(ArgSet{0, 1}, {{1, 0}})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(completions_direct(load_structure("ciaf0.iaf")), want);
  EXPECT_EQ(completions_direct(one_way_attack_ciaf()), want);
}

TEST(Completions, AfIsItsOwnCompletion) {
  ArgFramework af(ArgSet{0, 1, 2}, {{0, 1}, {2, 2}});
  EXPECT_EQ(completions_direct(iaf_of_af(af)), CompletionSet{af});
}

TEST(Completions, ValuationOf) {
  const std::size_t n = 6;
  Structure iaf0 = load_structure("iaf0.iaf");
  const auto& iaf = std::get<Iaf>(iaf0);
  Valuation v = valuation_of(iaf0, n);
  EXPECT_EQ(v, valuation_of_af(ArgFramework(iaf.fixed_args | iaf.uncertain_args, iaf.fixed_attacks), n) -
                   valuation_of_vars(aw_vars(iaf.uncertain_args), n));
  EXPECT_EQ(iaf.fixed_args.size(), 3U);
  EXPECT_EQ(iaf.fixed_attacks.size(), 7U);
  EXPECT_EQ(iaf.uncertain_args.size(), 3U);
  EXPECT_EQ(iaf.uncertain_attacks.size(), 1U);
  EXPECT_TRUE(valuation_of(load_structure("ciaf0.iaf"), 2).empty());
  ArgFramework af(ArgSet{0, 2}, {{0, 2}});
  EXPECT_EQ(valuation_of(Structure{iaf_of_af(af)}, 3), valuation_of_af(af, 3));
}

TEST(Completions, MakeCompOnWorkedStructures) {
  for (const std::string name : {"iaf0.iaf", "riaf0.iaf", "ciaf0.iaf"}) {
    Evaluator ev(universe_of(name));
    Structure s = load_structure(name);
    EXPECT_EQ(completions_dlpa(s, ev), completions_direct(s)) << name;
  }
}

TEST(Completions, DirectEqualsDlpaOnRandomStructures) {
  Random rng(51);
  const char* kinds[] = {"iaf", "riaf", "ciaf", "ciafjm", "dargiaf"};
  for (std::size_t kind = 0; kind < 5; ++kind) {
    for (int i = 0; i < 100; ++i) {
      // Four-argument cIAFs are left to the acceptance run.
      std::size_t n = 1 + rng.below(kind == 2 ? 3 : 4);
      Structure s = random_structure(kind, n, rng);
      Evaluator ev(n);
      ASSERT_EQ(completions_dlpa(s, ev), completions_direct(s)) << kinds[kind] << " sample " << i;
    }
  }
}

TEST(Completions, IafBoundsAndRiafClause) {
  Random rng(52);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng.below(4);
    Riaf r = random_riaf(n, rng);
    Iaf iaf{r.fixed_args, r.fixed_attacks, r.uncertain_args, r.uncertain_attacks};
    for (const auto& af : completions_direct(iaf)) {
      ASSERT_TRUE(iaf.fixed_args.is_subset_of(af.args()));
      ASSERT_TRUE(af.args().is_subset_of(iaf.fixed_args | iaf.uncertain_args));
      for (const auto& att : restrict_attacks(iaf.fixed_attacks, af.args())) ASSERT_TRUE(af.attacks().count(att));
      for (const auto& att : af.attacks()) {
        ASSERT_TRUE(iaf.fixed_attacks.count(att) || iaf.uncertain_attacks.count(att));
      }
    }
    for (const auto& af : completions_direct(r)) {
      for (const auto& [x, y] : r.sym_attacks) {
        if (af.args().contains(x) && af.args().contains(y)) {
          ASSERT_TRUE(af.attacks().count({x, y}) || af.attacks().count({y, x}));
        }
      }
    }
    ASSERT_EQ(completions_direct(riaf_of_iaf(iaf)), completions_direct(iaf));
    ASSERT_EQ(completions_direct(CiafJm{iaf, Formula::top()}), completions_direct(iaf));
  }
}

// cIAF completions are the projected Aw/Att models of the constraint.
TEST(Completions, CiafModelsProjected) {
  Random rng(53);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + rng.below(3);
    Ciaf s = random_ciaf(n, rng);
    std::vector<Var> vars = aw_vars(ArgSet::first_n(n));
    auto atts = att_vars(ArgSet::first_n(n), ArgSet::first_n(n));
    vars.insert(vars.end(), atts.begin(), atts.end());
    Evaluator ev(n);
    std::set<ArgFramework> models;
    for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
      Valuation v;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if ((mask >> k) & 1U) v.insert(dense_index(vars[k], n));
      }
      if (!s.args.is_subset_of(ArgSet::first_n(n))) continue;
      bool outside = false;
      for (const auto& x : vars) {
        if (v.contains(dense_index(x, n)) && x.kind == VarKind::aw && !s.args.contains(x.first)) outside = true;
        if (v.contains(dense_index(x, n)) && x.kind == VarKind::att &&
            !(s.args.contains(x.first) && s.args.contains(x.second))) {
          outside = true;
        }
      }
      if (!outside && ev.eval(v, s.constraint)) models.insert(af_of_valuation(v, n));
    }
    ASSERT_EQ(completions_direct(s), CompletionSet(models.begin(), models.end())) << "sample " << i;
  }
}

TEST(Dependencies, Translation) {
  EXPECT_EQ(translate_dependencies({}), Formula::top());
  const ArgId a = 0;
  const ArgId c = 2;
  const ArgId e = 4;
  DArgIaf s{ArgSet{a}, ArgSet{c, e}, {{c, a}, {e, a}}, {}};
  EXPECT_EQ(completions_direct(s).size(), 4U);
  s.deps = {Dependency{Dependency::Kind::choice, ArgSet{c, e}, {}}};
  CompletionSet got = completions_direct(s);
  ASSERT_EQ(got.size(), 2U);
  EXPECT_EQ(got[0].args(), (ArgSet{a, c}));
  EXPECT_EQ(got[1].args(), (ArgSet{a, e}));
  Evaluator ev(5);
  EXPECT_EQ(completions_dlpa(Structure{s}, ev), got);

  s.deps = {Dependency{Dependency::Kind::nand, ArgSet{c}, {}}, Dependency{Dependency::Kind::disjunction, ArgSet{c}, {}}};
  EXPECT_TRUE(completions_direct(s).empty());
  EXPECT_TRUE(completions_dlpa(Structure{s}, ev).empty());
}

TEST(Dependencies, SatisfactionMatchesTranslation) {
  Random rng(54);
  for (int i = 0; i < 200; ++i) {
    DArgIaf s = random_dargiaf(1 + rng.below(4), rng);
    Formula t = translate_dependencies(s.deps);
    Evaluator ev(4);
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      ArgSet args = ArgSet(bits) & s.uncertain_args;
      bool direct = std::all_of(s.deps.begin(), s.deps.end(), [&](const Dependency& d) { return d.satisfied_by(args); });
      ASSERT_EQ(ev.eval(valuation_of_vars(aw_vars(args), 4), t), direct);
    }
  }
}

std::vector<Valuation> all_aw_att_valuations(std::size_t n) {
  std::vector<Var> vars = aw_vars(ArgSet::first_n(n));
  auto atts = att_vars(ArgSet::first_n(n), ArgSet::first_n(n));
  vars.insert(vars.end(), atts.begin(), atts.end());
  std::vector<Valuation> out;
  for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
    Valuation v;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if ((mask >> k) & 1U) v.insert(dense_index(vars[k], n));
    }
    out.push_back(v);
  }
  return out;
}

bool dangling(const Valuation& v, std::size_t n) {
  for (std::size_t i : v.indices()) {
    Var x = var_from_index(i, n);
    if (x.kind == VarKind::att &&
        !(v.contains(dense_index(Var::aw(x.first), n)) && v.contains(dense_index(Var::aw(x.second), n)))) {
      return true;
    }
  }
  return false;
}

TEST(Theory, PinsExactlyOneValuation) {
  constexpr std::size_t n = 2;
  Evaluator ev(n);
  auto vals = all_aw_att_valuations(n);
  Random rng(55);
  for (int i = 0; i < 30; ++i) {
    ArgFramework af = random_af(rng.subset(ArgSet::first_n(n)), rng);
    Formula th = theory_of_af(af, n);
    for (const auto& v : vals) {
      bool sat = ev.eval(v, th);
      ASSERT_EQ(sat, v == valuation_of_af(af, n));
      if (!dangling(v, n)) ASSERT_EQ(sat, af_of_valuation(v, n) == af);
    }
  }
  for (const auto& v : vals) EXPECT_EQ(ev.eval(v, theory_of_af(ArgFramework{}, n)), v.empty());
}

TEST(Theory, CompletionCharacterisation) {
  const std::size_t n = 6;
  Structure st = load_structure("iaf0.iaf");
  const auto& iaf = std::get<Iaf>(st);
  Formula phi = Formula::diamond(
      Program::converse(Program::sequence(Program::test(theory_of_iaf(iaf, n)), make_comp(iaf))), Formula::top());
  // Every Aw/Att variable that some completion could set, plus two that none can.
  std::vector<Var> vars = aw_vars(iaf.fixed_args | iaf.uncertain_args);
  for (const auto& v : att_vars(iaf.fixed_attacks)) vars.push_back(v);
  for (const auto& v : att_vars(iaf.uncertain_attacks)) vars.push_back(v);
  vars.push_back(Var::att(0, 0));
  vars.push_back(Var::att(3, 5));
  Evaluator ev(n);
  std::set<ArgFramework> got;
  for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
    Valuation v;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if ((mask >> k) & 1U) v.insert(dense_index(vars[k], n));
    }
    if (ev.eval(v, phi)) got.insert(af_of_valuation(v, n));
  }
  EXPECT_EQ(CompletionSet(got.begin(), got.end()), completions_direct(st));
}

TEST(Expressivity, CiafFromCompletionSet) {
  const std::size_t n = 6;
  Structure riaf0 = load_structure("riaf0.iaf");
  CompletionSet target = completions_direct(riaf0);
  Ciaf c = ciaf_from_completion_set(target, n);
  EXPECT_EQ(completions_direct(c), target);
  EXPECT_TRUE(completions_direct(ciaf_from_completion_set({}, n)).empty());
  CompletionSet two = completions_direct(one_way_attack_ciaf());
  EXPECT_EQ(completions_direct(ciaf_from_completion_set(two, 2)), two);
}

std::vector<ArgFramework> all_graphs(std::size_t n) {
  std::set<ArgFramework> out;
  for (const auto& v : all_aw_att_valuations(n)) out.insert(af_of_valuation(v, n));
  return {out.begin(), out.end()};
}

TEST(Expressivity, CiafReproducesRandomTargets) {
  auto graphs = all_graphs(2);
  ASSERT_EQ(graphs.size(), 21U);
  Random rng(56);
  Evaluator ev(2);
  for (int i = 0; i < 300; ++i) {
    CompletionSet target;
    for (const auto& g : graphs) {
      if (rng.chance(1, 3)) target.push_back(g);
    }
    Ciaf c = ciaf_from_completion_set(target, 2);
    ASSERT_EQ(completions_direct(c), target);
    ASSERT_EQ(completions_dlpa(Structure{c}, ev), target);
  }
}

TEST(Expressivity, RiafCannotExpressOneWayAttack) {
  EXPECT_TRUE(riaf_inexpressibility_check());
  CompletionSet target = completions_direct(one_way_attack_ciaf());
  EXPECT_FALSE(find_expressing_riaf(target, 2, true).has_value());
  ArgFramework af(ArgSet{0, 1}, {{0, 1}});
  auto found = find_expressing_riaf(CompletionSet{af}, 2);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(completions_direct(*found), CompletionSet{af});
}

}  // namespace
}  // namespace argdlpa
