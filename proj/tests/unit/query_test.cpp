#include <gtest/gtest.h>

#include "argdlpa/errors.hpp"
#include "argdlpa/framework_file.hpp"
#include "argdlpa/query.hpp"
#include "argdlpa/random.hpp"
#include "paths.hpp"

namespace argdlpa {
namespace {

using testing::fixture;

enum : ArgId { a, b, c, d, e, f };

struct Loaded {
  FrameworkFile file;
  explicit Loaded(const std::string& name) : file(load_framework(fixture(name))) {}
  [[nodiscard]] Structure structure() const { return as_structure(file); }
  [[nodiscard]] Control control() const { return as_control(file); }
  [[nodiscard]] const Universe& universe() const { return file.universe; }
};

TEST(Query, ModeNames) {
  for (auto m : kAllAcceptanceModes) EXPECT_EQ(parse_acceptance_mode(to_string(m)), m);
  for (auto m : kAllControllabilityModes) EXPECT_EQ(parse_controllability_mode(to_string(m)), m);
  EXPECT_EQ(parse_engine("both"), Engine::both);
  EXPECT_FALSE(parse_acceptance_mode("nscon").has_value());
}

TEST(Query, Iaf0Examples) {
  Loaded iaf("iaf0.iaf");
  auto no = cross_check(iaf.structure(), iaf.universe(), Semantics::stable, a, AcceptanceMode::pca);
  EXPECT_FALSE(no.direct.answer);
  EXPECT_FALSE(no.dlpa.answer);

  QueryResult yes = acceptance_direct(iaf.structure(), iaf.universe(), Semantics::stable, b, AcceptanceMode::pca);
  ASSERT_TRUE(yes.answer);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_EQ(*yes.witness->completion, ArgFramework(ArgSet{a, b, d}, {{b, a}, {d, a}}));
  EXPECT_EQ(*yes.witness->extension, (ArgSet{b, d}));
  EXPECT_TRUE(verify_witness(iaf.structure(), Semantics::stable, b, AcceptanceMode::pca, yes));
  QueryResult dl = acceptance_dlpa(iaf.structure(), iaf.universe(), Semantics::stable, b, AcceptanceMode::pca);
  EXPECT_TRUE(dl.answer);
  EXPECT_TRUE(verify_witness(iaf.structure(), Semantics::stable, b, AcceptanceMode::pca, dl));
}

TEST(Query, Ciaf0Examples) {
  Loaded ciaf("ciaf0.iaf");
  QueryResult pca = acceptance_direct(ciaf.structure(), ciaf.universe(), Semantics::grounded, a, AcceptanceMode::pca);
  EXPECT_TRUE(pca.answer);
  EXPECT_EQ(*pca.witness->completion, ArgFramework(ArgSet{a, b}, {{a, b}}));
  QueryResult nsa = acceptance_direct(ciaf.structure(), ciaf.universe(), Semantics::grounded, a, AcceptanceMode::nsa);
  EXPECT_FALSE(nsa.answer);
  EXPECT_EQ(*nsa.witness->completion, ArgFramework(ArgSet{a, b}, {{b, a}}));
  EXPECT_EQ(*nsa.witness->extension, ArgSet{b});
}

TEST(Query, EnginesAgreeOnWorkedStructures) {
  for (const std::string name : {"iaf0.iaf", "riaf0.iaf", "ciaf0.iaf"}) {
    Loaded s(name);
    Structure st = s.structure();
    ArgSet candidates = s.file.kind == FrameworkKind::ciaf ? s.universe().all()
                                                            : std::visit([](const auto& x) -> ArgSet {
                                                                if constexpr (requires { x.fixed_args; }) {
                                                                  return x.fixed_args;
                                                                } else {
                                                                  return ArgSet{};
                                                                }
                                                              }, st);
    DlpaEngine engine(s.universe().size());
    for (Semantics sem : kAllSemantics) {
      for (ArgId x : candidates.members()) {
        for (auto mode : kAllAcceptanceModes) {
          QueryResult direct = acceptance_direct(st, s.universe(), sem, x, mode);
          QueryResult dl = engine.acceptance(st, s.universe(), sem, x, mode);
          ASSERT_EQ(direct.answer, dl.answer) << name << " " << to_string(sem) << " " << x << " " << to_string(mode);
          ASSERT_TRUE(verify_witness(st, sem, x, mode, direct));
          ASSERT_TRUE(verify_witness(st, sem, x, mode, dl));
        }
      }
    }
  }
}

TEST(Query, AfAsIaf) {
  ArgFramework af(ArgSet{a, b, c}, {{a, b}, {b, c}, {c, a}});
  Universe u = Universe::letters(3);
  for (Semantics sem : kAllSemantics) {
    for (ArgId x : {a, b, c}) {
      bool cred = credulously_accepted(af, sem, x);
      EXPECT_EQ(acceptance_direct(Structure{iaf_of_af(af)}, u, sem, x, AcceptanceMode::nca).answer, cred);
      EXPECT_EQ(acceptance_direct(Structure{iaf_of_af(af)}, u, sem, x, AcceptanceMode::pca).answer, cred);
    }
  }
}

TEST(Query, InconsistentCiaf) {
  Universe u = Universe::letters(2);
  Structure bottom{Ciaf{ArgSet{a, b}, Formula::bottom()}};
  for (Semantics sem : {Semantics::stable, Semantics::grounded}) {
    for (auto mode : kAllAcceptanceModes) {
      bool want = mode == AcceptanceMode::nca || mode == AcceptanceMode::nsa;
      auto r = cross_check(bottom, u, sem, a, mode);
      EXPECT_EQ(r.direct.answer, want);
      EXPECT_EQ(r.dlpa.answer, want);
    }
  }
}

TEST(Query, Preconditions) {
  Loaded iaf("iaf0.iaf");
  EXPECT_THROW(check_acceptance_precondition(iaf.structure(), iaf.universe(), c), DomainError);
  EXPECT_NO_THROW(check_acceptance_precondition(iaf.structure(), iaf.universe(), a));
  Universe u = Universe::letters(2);
  Structure maybe_a{Ciaf{ArgSet{a, b}, Formula::atom(Var::aw(b))}};
  try {
    check_acceptance_precondition(maybe_a, u, a);
    FAIL() << "expected DomainError";
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("({b},{})"), std::string::npos) << err.what();
  }
  EXPECT_THROW((void)acceptance_dlpa(maybe_a, u, Semantics::stable, a, AcceptanceMode::nca), DomainError);
  Loaded caf("caf0.iaf");
  EXPECT_THROW(check_controllability_precondition(caf.control(), caf.universe(), b), DomainError);
  EXPECT_THROW(check_controllability_precondition(caf.control(), caf.universe(), c), DomainError);
}

TEST(Controllability, Caf0Examples) {
  Loaded caf("caf0.iaf");
  QueryResult r = controllability_direct(caf.control(), caf.universe(), Semantics::stable, a, ControllabilityMode::nscon);
  ASSERT_TRUE(r.answer);
  EXPECT_EQ(r.witness->configuration->chosen, ArgSet{});
  for (Semantics sem : {Semantics::stable, Semantics::grounded, Semantics::preferred}) {
    for (auto mode : kAllControllabilityModes) {
      auto rep = cross_check(caf.control(), caf.universe(), sem, a, mode);
      EXPECT_EQ(rep.direct.answer, rep.dlpa.answer);
      EXPECT_TRUE(verify_witness(caf.control(), sem, a, mode, rep.direct));
      EXPECT_TRUE(verify_witness(caf.control(), sem, a, mode, rep.dlpa));
    }
  }
}

TEST(Controllability, NoControlArgumentsIsAcceptance) {
  Random rng(71);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 1 + rng.below(3);
    Riaf r = random_riaf(n, rng);
    Caf caf{r.fixed_args, r.fixed_attacks, r.uncertain_args, r.uncertain_attacks, r.sym_attacks, {}, {}};
    Universe u = Universe::letters(n);
    ArgId x = r.fixed_args.members().front();
    for (std::size_t m = 0; m < 4; ++m) {
      bool ctl = controllability_direct(Control{caf}, u, Semantics::complete, x, kAllControllabilityModes[m]).answer;
      bool acc = acceptance_direct(Structure{r}, u, Semantics::complete, x,
                                   inner_mode(kAllControllabilityModes[m])).answer;
      ASSERT_EQ(ctl, acc);
    }
  }
}

// NSA => NCA => PCA and NSA => PSA => PCA when every completion has an extension.
TEST(Query, ModeLattice) {
  Random rng(72);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng.below(4);
    Structure s = random_structure(rng.below(5), n, rng);
    Universe u = Universe::letters(n);
    auto completions = completions_direct(s);
    ArgSet common = u.all();
    for (const auto& af : completions) common = common & af.args();
    if (completions.empty() || common.empty()) continue;
    ArgId x = common.members().front();
    if (std::holds_alternative<Iaf>(s) && !std::get<Iaf>(s).fixed_args.contains(x)) continue;
    if (std::holds_alternative<Riaf>(s) && !std::get<Riaf>(s).fixed_args.contains(x)) continue;
    for (Semantics sem : kAllSemantics) {
      bool guard = std::all_of(completions.begin(), completions.end(),
                               [&](const ArgFramework& af) { return !extensions(af, sem).empty(); });
      if (!guard) continue;
      auto ans = [&](AcceptanceMode m) { return acceptance_direct(s, u, sem, x, m).answer; };
      bool nsa = ans(AcceptanceMode::nsa);
      bool nca = ans(AcceptanceMode::nca);
      bool psa = ans(AcceptanceMode::psa);
      bool pca = ans(AcceptanceMode::pca);
      ASSERT_TRUE(!nsa || nca);
      ASSERT_TRUE(!nca || pca);
      ASSERT_TRUE(!nsa || psa);
      ASSERT_TRUE(!psa || pca);
    }
  }
}

// A precondition-satisfying argument of s, if any.
std::optional<ArgId> query_argument(const Structure& s, std::size_t n, Random& rng) {
  ArgSet allowed = ArgSet::first_n(n);
  for (const auto& af : completions_direct(s)) allowed = allowed & af.args();
  if (const auto* iaf = std::get_if<Iaf>(&s)) allowed = allowed & iaf->fixed_args;
  if (const auto* riaf = std::get_if<Riaf>(&s)) allowed = allowed & riaf->fixed_args;
  if (allowed.empty()) return std::nullopt;
  return rng.pick(allowed.members());
}

TEST(Query, RandomEngineAgreementWithWitnesses) {
  Random rng(73);
  for (std::size_t kind = 0; kind < 5; ++kind) {
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + rng.below(3);
      Structure s = random_structure(kind, n, rng);
      auto x = query_argument(s, n, rng);
      if (!x) continue;
      Universe u = Universe::letters(n);
      Semantics sem = kAllSemantics[rng.below(kAllSemantics.size())];
      AcceptanceMode mode = kAllAcceptanceModes[rng.below(4)];
      auto rep = cross_check(s, u, sem, *x, mode);
      ASSERT_TRUE(verify_witness(s, sem, *x, mode, rep.direct));
      ASSERT_TRUE(verify_witness(s, sem, *x, mode, rep.dlpa));
    }
  }
}

TEST(Query, Describe) {
  Loaded iaf("iaf0.iaf");
  QueryResult yes = acceptance_direct(iaf.structure(), iaf.universe(), Semantics::stable, b, AcceptanceMode::pca);
  EXPECT_EQ(describe(yes, iaf.universe()), "yes; completion ({a,b,d},{(b,a),(d,a)}); extension {b,d}");
}

}  // namespace
}  // namespace argdlpa
