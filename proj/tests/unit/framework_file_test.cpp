#include <gtest/gtest.h>

#include "argdlpa/errors.hpp"
#include "argdlpa/framework_file.hpp"
#include "argdlpa/random.hpp"
#include "paths.hpp"

namespace argdlpa {
namespace {

using testing::fixture;

std::string error_of(const std::string& text) {
  try {
    (void)parse_framework(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

TEST(FrameworkFile, Fixtures) {
  for (const std::string name : {"a0.af", "a1.af", "a2.af", "iaf0.iaf", "riaf0.iaf", "ciaf0.iaf", "caf0.iaf"}) {
    EXPECT_NO_THROW((void)load_framework(fixture(name))) << name;
  }
  FrameworkFile a0 = load_framework(fixture("a0.af"));
  EXPECT_EQ(a0.kind, FrameworkKind::af);
  EXPECT_EQ(a0.universe.names(), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  EXPECT_EQ(std::get<ArgFramework>(a0.structure).attacks().size(), 6U);
  FrameworkFile riaf = load_framework(fixture("riaf0.iaf"));
  const auto& r = std::get<Riaf>(riaf.structure);
  ArgId c = riaf.universe.at("c");
  ArgId e = riaf.universe.at("e");
  EXPECT_EQ(r.sym_attacks, (AttackSet{{c, e}, {e, c}}));
  EXPECT_TRUE(is_control(load_framework(fixture("caf0.iaf"))));
  EXPECT_THROW((void)load_framework(fixture("missing.af")), InvariantError);
}

TEST(FrameworkFile, AttackWithoutArgument) {
  FrameworkFile af = parse_framework("kind: af\narg(b).\natt(a,b).\n");
  EXPECT_TRUE(std::get<ArgFramework>(af.structure).attacks().empty());
  std::string msg = error_of("kind: iaf\narg(b).\natt(a,b).\n");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(FrameworkFile, Errors) {
  EXPECT_NE(error_of("arg(a).\n").find("kind"), std::string::npos);
  EXPECT_NE(error_of("kind: zzz\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("kind: af\nfoo(a).\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("kind: af\n?arg(a).\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("kind: af\nuniverse: a\narg(b).\n").find("not in the universe"), std::string::npos);
  EXPECT_NE(error_of("kind: iaf\narg(a). arg(b).\natt(a,b).\n?att(a,b).\n").find("line 4"), std::string::npos);
  EXPECT_NE(error_of("kind: iaf\narg(a). ?arg(a).\n").find("already declared"), std::string::npos);
  EXPECT_NE(error_of("kind: riaf\narg(a).\n<->att(a,a).\n").find("line 3"), std::string::npos);
  std::string msg = error_of("kind: ciaf\narg(a).\nconstraint: (aw(a)\n");
  EXPECT_NE(msg.find("line 3, column"), std::string::npos) << msg;
  EXPECT_THROW((void)parse_framework("kind: ciaf\narg(a).\nconstraint: (aw(a)\n"), ParseError);
  EXPECT_THROW((void)parse_framework("kind: ciaf\narg(a).\nconstraint: in(a)\n"), InvariantError);
  EXPECT_THROW((void)parse_framework("kind: caf\narg(a). carg(b).\ncatt(a,a).\n"), InvariantError);
}

TEST(FrameworkFile, RoundTripWorkedFixtures) {
  for (const std::string name : {"a0.af", "iaf0.iaf", "riaf0.iaf", "ciaf0.iaf", "caf0.iaf"}) {
    FrameworkFile f = load_framework(fixture(name));
    std::string text = write_framework(f);
    FrameworkFile again = parse_framework(text);
    EXPECT_EQ(write_framework(again), text) << name;
    EXPECT_EQ(again.universe, f.universe);
  }
}

TEST(FrameworkFile, DependenciesAndJm) {
  FrameworkFile d = parse_framework(
      "kind: dargiaf\narg(a). ?arg(c). ?arg(e).\natt(c,a). att(e,a).\ndep: choice({c,e})\ndep: implies({c},{e})\n");
  const auto& s = std::get<DArgIaf>(d.structure);
  ASSERT_EQ(s.deps.size(), 2U);
  EXPECT_EQ(s.deps[0].kind, Dependency::Kind::choice);
  EXPECT_EQ(s.deps[1].kind, Dependency::Kind::implies);
  EXPECT_EQ(parse_framework(write_framework(d)).universe, d.universe);
  EXPECT_THROW((void)parse_framework("kind: dargiaf\narg(a). ?arg(c).\ndep: or({a})\n"), InvariantError);

  FrameworkFile jm = parse_framework("kind: ciafjm\narg(a). ?arg(b).\n?att(a,b).\nconstraint: aw(b) -> att(a,b)\n");
  EXPECT_EQ(completions_direct(as_structure(jm)).size(), 2U);
}

TEST(FrameworkFile, ConstraintTargets) {
  FrameworkFile caf = load_framework(fixture("caf0.iaf"));
  EXPECT_THROW((void)as_structure(caf), DomainError);
  auto t = as_constraint_target(caf, ControlConfiguration{ArgSet{}});
  EXPECT_EQ(completions_direct(t).size(), 16U);
  EXPECT_THROW((void)as_constraint_target(load_framework(fixture("iaf0.iaf")), ControlConfiguration{}), DomainError);
  EXPECT_THROW((void)as_control(load_framework(fixture("iaf0.iaf"))), DomainError);
}

TEST(FrameworkFile, RandomRoundTrip) {
  Random rng(81);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng.below(4);
    Universe u = Universe::letters(n);
    FrameworkFile f{FrameworkKind::caf, u, random_caf(n, rng)};
    std::string text = write_framework(f);
    FrameworkFile g = parse_framework(text);
    ASSERT_EQ(write_framework(g), text);
    ASSERT_EQ(completions_direct(as_control(g)), completions_direct(std::get<Caf>(f.structure)));
  }
}

}  // namespace
}  // namespace argdlpa
