#include <gtest/gtest.h>

#include "argdlpa/encodings.hpp"
#include "argdlpa/errors.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/random.hpp"

namespace argdlpa {
namespace {

enum : ArgId { a, b, c, d, e };

ArgFramework af0() {
  return ArgFramework(ArgSet::first_n(5), {{b, a}, {d, a}, {c, b}, {e, d}, {c, e}, {e, c}});
}
ArgFramework af1() { return ArgFramework(ArgSet::first_n(4), {{b, a}, {c, b}, {d, b}, {d, d}}); }

Valuation with_in(Valuation v, ArgSet s, std::size_t n) {
  s.for_each([&](ArgId x) { v.insert(dense_index(Var::in(x), n)); });
  return v;
}

// Aw/Att projection of a valuation.
Valuation structural(const Valuation& v, std::size_t n) {
  Valuation out;
  for (std::size_t i : v.indices()) {
    VarKind k = var_from_index(i, n).kind;
    if (k == VarKind::aw || k == VarKind::att) out.insert(i);
  }
  return out;
}

TEST(ValuationMaps, Examples) {
  EXPECT_EQ(valuation_of_af(ArgFramework(ArgSet{a}, {}), 2), Valuation{dense_index(Var::aw(a), 2)});
  EXPECT_EQ(af_of_valuation(Valuation{dense_index(Var::att(a, b), 2)}, 2), ArgFramework{});
  Valuation v{dense_index(Var::in(b), 3), dense_index(Var::in_prime(a), 3)};
  EXPECT_EQ(ext_of_valuation(v, 3), ArgSet{b});
  EXPECT_EQ(primed_ext_of_valuation(v, 3), ArgSet{a});
}

TEST(ValuationMaps, RoundTrip) {
  Random rng(41);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng.below(6);
    ArgFramework af = random_af(rng.subset(ArgSet::first_n(n)), rng);
    EXPECT_EQ(af_of_valuation(valuation_of_af(af, n), n), af);
  }
}

TEST(Encodings, FormulaExamples) {
  EncodingContext ctx(5);
  Evaluator ev(5);
  Valuation v0 = valuation_of_af(af0(), 5);
  EXPECT_TRUE(ev.eval(with_in(v0, ArgSet{b, e}, 5), ctx.stable()));
  EXPECT_FALSE(ev.eval(with_in(v0, ArgSet{a, b}, 5), ctx.stable()));
  EXPECT_FALSE(ev.eval(Valuation{dense_index(Var::in(c), 5)}, ctx.well()));

  EncodingContext one(1);
  Evaluator ev1(1);
  EXPECT_TRUE(ev1.eval({}, one.complete()));
}

TEST(Encodings, MakeExtOnWorkedFrameworks) {
  EncodingContext ctx(5);
  Evaluator ev(5);
  EXPECT_EQ(encoded_extensions(af0(), Semantics::stable, ctx, ev), (std::vector<ArgSet>{ArgSet{b, e}, ArgSet{c, d}}));
  EXPECT_EQ(encoded_extensions(af0(), Semantics::grounded, ctx, ev), std::vector<ArgSet>{ArgSet{}});
  for (Semantics s : kAllSemantics) {
    EXPECT_EQ(encoded_extensions(ArgFramework{}, s, ctx, ev), std::vector<ArgSet>{ArgSet{}}) << to_string(s);
  }
}

TEST(Encodings, CheckEncodingWorkedFrameworks) {
  for (Semantics s : kAllSemantics) {
    EncodingReport r = check_encoding(af0(), s, 5);
    EXPECT_TRUE(r.agrees) << to_string(s);
    EXPECT_EQ(r.oracle, extensions(af0(), s));
  }
  EncodingReport st = check_encoding(af1(), Semantics::stable, 4);
  EXPECT_TRUE(st.agrees);
  EXPECT_TRUE(st.oracle.empty());
  EXPECT_TRUE(st.encoding.empty());
}

TEST(Encodings, Bounds) {
  EncodingBounds bounds;
  EXPECT_EQ(bounds.for_semantics(Semantics::stable), 6U);
  EXPECT_EQ(bounds.for_semantics(Semantics::stage), 5U);
  EXPECT_EQ(bounds.for_semantics(Semantics::eager), 5U);
  EXPECT_THROW((void)check_encoding(ArgFramework{}, Semantics::stable, 7), ResourceError);
  EXPECT_THROW((void)check_encoding(ArgFramework{}, Semantics::ideal, 4, EncodingBounds{6, 5, 3}), ResourceError);
}

// Every valuation over P_U for |U| = 2, including ill-formed ones.
TEST(EncodingCorrectness, FormulasCharacteriseExtensions) {
  constexpr std::size_t n = 2;
  std::vector<Var> vars = {Var::aw(a), Var::aw(b), Var::in(a), Var::in(b)};
  for (ArgId x : {a, b}) {
    for (ArgId y : {a, b}) vars.push_back(Var::att(x, y));
  }
  EncodingContext ctx(n);
  Evaluator ev(n);
  for (std::uint32_t mask = 0; mask < (1U << vars.size()); ++mask) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if ((mask >> i) & 1U) v.insert(dense_index(vars[i], n));
    }
    ArgFramework af = af_of_valuation(v, n);
    ArgSet ext = ext_of_valuation(v, n);
    for (Semantics s : kAllSemantics) {
      auto sets = extensions(af, s);
      bool member = std::find(sets.begin(), sets.end(), ext) != sets.end();
      ASSERT_EQ(ev.eval(v, ctx.formula(s)), member) << to_string(s) << " mask " << mask;
    }
  }
}

TEST(EncodingCorrectness, ExhaustiveThreeArguments) {
  std::vector<Attack> pairs;
  for (ArgId x = 0; x < 3; ++x) {
    for (ArgId y = 0; y < 3; ++y) pairs.emplace_back(x, y);
  }
  EncodingContext ctx(3);
  Evaluator ev(3);
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    AttackSet r;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) r.insert(pairs[i]);
    }
    ArgFramework af(ArgSet::first_n(3), r);
    for (Semantics s : kAllSemantics) {
      ASSERT_EQ(encoded_extensions(af, s, ctx, ev), extensions(af, s)) << to_string(s) << " mask " << mask;
    }
  }
}

TEST(EncodingCorrectness, RandomFourArguments) {
  Random rng(42);
  EncodingContext ctx(4);
  Evaluator ev(4);
  for (int i = 0; i < 40; ++i) {
    ArgFramework af = random_af(rng.subset(ArgSet::first_n(4), 3, 4), rng);
    for (Semantics s : kAllSemantics) ASSERT_EQ(encoded_extensions(af, s, ctx, ev), extensions(af, s)) << to_string(s);
  }
}

// copy; makeExt(co) keeps the old extension in the primed copy.
TEST(CopyMachinery, CopyThenComplete) {
  constexpr std::size_t n = 4;
  EncodingContext ctx(n);
  Evaluator ev(n);
  Random rng(43);
  Program prog = Program::sequence(ctx.copy(), ctx.make_ext(Semantics::complete));
  for (int i = 0; i < 100; ++i) {
    ArgFramework af = random_af(rng.subset(ArgSet::first_n(n), 3, 4), rng);
    ArgSet ext = rng.subset(af.args());
    Valuation v = with_in(valuation_of_af(af, n), ext, n);
    auto succ = ev.successors(v, prog);
    ASSERT_FALSE(succ.empty());
    for (const auto& s : succ) {
      ASSERT_EQ(primed_ext_of_valuation(s, n), ext);
      ASSERT_EQ(structural(s, n), structural(v, n));
    }
  }
}

// The copy-comparison formulas compare ranges.
TEST(CopyMachinery, RangeComparison) {
  constexpr std::size_t n = 4;
  EncodingContext ctx(n);
  Evaluator ev(n);
  Random rng(44);
  for (int i = 0; i < 300; ++i) {
    ArgFramework af = random_af(rng.subset(ArgSet::first_n(n), 3, 4), rng);
    ArgSet ext = rng.subset(af.args());
    ArgSet primed = rng.subset(af.args());
    Valuation v = with_in(valuation_of_af(af, n), ext, n);
    primed.for_each([&](ArgId x) { v.insert(dense_index(Var::in_prime(x), n)); });
    ArgSet r_ext = range(af, ext);
    ArgSet r_primed = range(af, primed);
    ASSERT_EQ(ev.eval(v, ctx.includes_cp()), r_primed.is_subset_of(r_ext));
    ASSERT_EQ(ev.eval(v, ctx.included_in_cp()), r_ext.is_subset_of(r_primed));
  }
}

}  // namespace
}  // namespace argdlpa
