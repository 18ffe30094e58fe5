#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "froblab/cover.hpp"
#include "froblab/fsing.hpp"
#include "froblab/parse.hpp"
#include "determinantal_fixture.hpp"
#include "cover_cases.hpp"
#include "test_support.hpp"

using namespace froblab;
using namespace testing_support;

namespace {

std::vector<Polynomial> polys(const RingHandle& r, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse(t, r));
  return out;
}

CoverContext make_context(const RingHandle& r, std::initializer_list<std::string_view> relations,
                          std::initializer_list<std::string_view> canonical, std::string_view f) {
  return CoverContext(QuotientPresentation(Ideal::parse(r, relations)), Ideal::parse(r, canonical),
                      parse(f, r));
}

CoverContext determinantal_context(std::string_view f) {
  auto r = testing_support::determinantal_ring();
  return CoverContext(QuotientPresentation(testing_support::determinantal_ideal(r)),
                      Ideal::parse(r, {"x1", "x4", "x5"}), parse(f, r));
}

}  // namespace

TEST(CoverContext, RejectsBadCanonicalIdeal) {
  auto r = Ring::make(3, {"x", "y"});
  EXPECT_THROW(make_context(r, {}, {"x + 1"}, "1"), Error);
  EXPECT_THROW(make_context(r, {"x"}, {"x"}, "1"), Error);
  auto other = Ring::make(5, {"x", "y"});
  EXPECT_THROW(CoverContext(QuotientPresentation(Ideal::zero(r)), Ideal::parse(other, {"x"}),
                            parse("1", r)),
               Error);
}

TEST(CoverElement, RequiresSecondComponentInCanonicalIdeal) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto r = ctx.ring();
  EXPECT_NO_THROW(make_element(ctx, parse("y", r), parse("x*y", r)));
  try {
    make_element(ctx, parse("1", r), parse("y", r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInCanonicalIdeal);
  }
}

TEST(CoverElement, EqualityIsModuloDefiningIdeal) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {"x*y"}, {"x"}, "1");
  auto r = ctx.ring();
  EXPECT_EQ(make_element(ctx, parse("y + x*y", r), parse("x + x*y", r)),
            make_element(ctx, parse("y", r), parse("x", r)));
}

TEST(CoverMul, SquareTwistGivesZeroDivisors) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto r = ctx.ring();
  auto b = parse("x", r);
  auto plus = make_element(ctx, parse("1", r), b);
  auto minus = make_element(ctx, parse("1", r), -b);
  EXPECT_EQ(cover_mul(ctx, plus, minus), make_element(ctx, parse("1 - x^2", r), parse("0", r)));
  auto zd1 = make_element(ctx, b, b);
  auto zd2 = make_element(ctx, b, -b);
  EXPECT_EQ(cover_mul(ctx, zd1, zd2), cover_zero(ctx));
}

TEST(CoverMul, TSquaredIsTwist) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "y + 2");
  auto r = ctx.ring();
  auto bt = make_element(ctx, parse("0", r), parse("x*y", r));
  EXPECT_EQ(cover_mul(ctx, bt, bt),
            make_element(ctx, parse("x^2*y^2*(y + 2)", r), parse("0", r)));
  EXPECT_EQ(cover_mul(ctx, cover_one(ctx), bt), bt);
}

TEST(CoverMul, ContextMismatch) {
  auto c1 = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto c2 = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto u = cover_one(c1);
  try {
    cover_mul(c2, u, cover_one(c2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContextMismatch);
  }
}

TEST(CoverIsUnit, ConstantTermDecides) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto r = ctx.ring();
  EXPECT_TRUE(cover_is_unit(ctx, make_element(ctx, parse("1", r), parse("x*y", r))));
  EXPECT_FALSE(cover_is_unit(ctx, make_element(ctx, parse("x", r), parse("x*y", r))));
  EXPECT_TRUE(cover_is_unit(ctx, make_element(ctx, parse("2", r), parse("x", r))));
}

TEST(CoverIsUnit, InverseFormula) {
  auto ctx = make_context(Ring::make(5, {"x", "y"}), {}, {"x"}, "y");
  auto r = ctx.ring();
  // (1 + xt)(1 - xt) = 1 - x^2 y; with a unit a this is invertible in the
  // power series ring, here it is enough that the product has no t part.
  auto u = make_element(ctx, parse("1", r), parse("x", r));
  auto conj = make_element(ctx, parse("1", r), parse("-x", r));
  auto prod = cover_mul(ctx, u, conj);
  EXPECT_TRUE(prod.b().is_zero());
  EXPECT_EQ(prod.a(), parse("1 - x^2*y", r));
}

TEST(CoverFrobenius, Examples) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "y + 1");
  auto r = ctx.ring();
  auto bt = make_element(ctx, parse("0", r), parse("x*y", r));
  EXPECT_EQ(cover_frobenius(ctx, bt, 1),
            make_element(ctx, parse("0", r), parse("x^3*y^3*(y + 1)", r)));
  EXPECT_EQ(cover_frobenius(ctx, bt, 0), bt);
  auto a = make_element(ctx, parse("x + y", r), parse("0", r));
  EXPECT_EQ(cover_frobenius(ctx, a, 1), make_element(ctx, parse("x^3 + y^3", r), parse("0", r)));
}

TEST(CoverFrobenius, EvenCharacteristicRejected) {
  auto ctx = make_context(Ring::make(2, {"x", "y"}), {}, {"x"}, "1");
  try {
    cover_frobenius(ctx, cover_one(ctx), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvenCharacteristic);
  }
}

TEST(CoverAlgebra, RingAxiomsAndFrobeniusOnRandomElements) {
  std::mt19937_64 rng(20261018);
  std::size_t checked = 0;
  for (unsigned p : {3U, 5U}) {
    auto r = Ring::make(p, {"x", "y", "z"});
    std::vector<CoverContext> contexts = {
        make_context(r, {}, {"x", "y"}, "1"),
        make_context(r, {"x*z - y^2"}, {"x", "y"}, "z + 1"),
        make_context(r, {"x*y*z"}, {"x"}, "y"),
    };
    for (const auto& ctx : contexts) {
      for (int trial = 0; trial < 40; ++trial) {
        auto u = random_element(rng, ctx);
        auto v = random_element(rng, ctx);
        auto w = random_element(rng, ctx);
        ASSERT_EQ(cover_mul(ctx, u, v), cover_mul(ctx, v, u));
        ASSERT_EQ(cover_mul(ctx, cover_mul(ctx, u, v), w), cover_mul(ctx, u, cover_mul(ctx, v, w)));
        ASSERT_EQ(cover_mul(ctx, u, cover_add(ctx, v, w)),
                  cover_add(ctx, cover_mul(ctx, u, v), cover_mul(ctx, u, w)));
        ASSERT_EQ(cover_mul(ctx, cover_one(ctx), u), u);
        ASSERT_EQ(cover_add(ctx, u, cover_neg(ctx, u)), cover_zero(ctx));
        ASSERT_EQ(cover_frobenius(ctx, u, 1), cover_pow(ctx, u, p));
        if (p == 3 && trial % 4 == 0) {
          ASSERT_EQ(cover_frobenius(ctx, u, 2), cover_pow(ctx, u, 9));
        }
        checked += 3;
      }
    }
  }
  EXPECT_GE(checked, 200U);
}

TEST(SocleLift, RegularPlane) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto r = ctx.ring();
  auto tail = polys(r, {"y"});
  auto lift = socle_lift(ctx, parse("x", r), tail);
  EXPECT_EQ(lift.z, parse("1", r));
  EXPECT_EQ(lift.u, parse("x", r));
}

TEST(SocleLift, DeterminantalRing) {
  auto ctx = determinantal_context("1");
  auto r = ctx.ring();
  auto tail = polys(r, {"x2 - x3"});
  auto x = parse("x4 + x5", r);
  auto lift = socle_lift(ctx, x, tail);
  EXPECT_TRUE(ctx.base().is_zero(lift.u - x * lift.z));
  Ideal ji = ctx.base().extend(lift.parameters * ctx.canonical());
  EXPECT_FALSE(ji.contains(lift.u));
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    EXPECT_TRUE(ji.contains(Polynomial::variable(r, i) * lift.u));
  }
}

TEST(SocleLift, ErrorPaths) {
  auto ctx = determinantal_context("1");
  auto r = ctx.ring();
  auto tail = polys(r, {"x2 - x3"});
  auto code_of = [&](const Polynomial& x, std::span<const Polynomial> t) {
    try {
      socle_lift(ctx, x, t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of(parse("x1", r), tail), ErrorCode::NotNZD);
  EXPECT_EQ(code_of(parse("x2", r), tail), ErrorCode::NotInCanonicalIdeal);
  // x2*x3 = 0 in R/I, so x2 is a zero divisor there.
  EXPECT_EQ(code_of(parse("x4 + x5", r), polys(r, {"x2"})), ErrorCode::NotRegularSequence);

  auto plane = make_context(Ring::make(3, {"x", "y"}), {}, {"x^2", "x*y"}, "1");
  auto pr = plane.ring();
  // R/I = k[x,y]/(x^2, xy) has depth 0: y is not regular on it.
  try {
    socle_lift(plane, parse("x^2", pr), polys(pr, {"y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegularSequence);
  }
}

TEST(SocleLift, TypeNotOne) {
  // R/(I + (z)) = k[x,y]/(x^2, xy, y^2) has a two dimensional socle.
  auto ctx = make_context(Ring::make(3, {"x", "y", "z", "w"}), {}, {"w"}, "1");
  auto r = ctx.ring();
  auto wide = CoverContext(ctx.base(), Ideal::parse(r, {"w", "x^2", "x*y", "y^2"}), parse("1", r));
  try {
    socle_lift(wide, parse("w", r), polys(r, {"z"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TypeNotOne) << to_string(e.code());
  }
}

TEST(CoverSocle, OneDimensionalAndSpannedByUt) {
  std::size_t instances = 0;
  for (const auto& c : type_one_cases()) {
    SCOPED_TRACE(c.label);
    auto ctx = context_of(c);
    auto sop = sop_of(c, ctx.ring());
    auto lift = socle_lift(ctx, sop.front(), std::span<const Polynomial>(sop).subspan(1));
    Ideal ji = ctx.base().extend(lift.parameters * ctx.canonical());
    EXPECT_FALSE(ji.contains(lift.u));
    auto soc = cover_socle(ctx, sop);
    ASSERT_EQ(soc.size(), 1U);
    EXPECT_TRUE(spanned_by_ut(ctx, sop, lift, soc.front())) << soc.front().to_string();
    ++instances;
  }
  EXPECT_GE(instances, 10U);
}

TEST(Criterion, DeterminantalExampleNoFailure) {
  auto ctx = determinantal_context("1");
  auto sop = polys(ctx.ring(), {"x4 + x5", "x2 - x3"});
  auto report = cover_injectivity_criterion(ctx, sop, 2);
  EXPECT_EQ(report.verdict, CriterionVerdict::NoFailureUpTo);
  EXPECT_EQ(report.e_max, 2U);
  EXPECT_FALSE(report.witness_e.has_value());
  EXPECT_FALSE(report.assumptions.empty());
  for (const auto& check : report.checks) EXPECT_TRUE(check.passed) << check.name;
}

TEST(Criterion, ZeroTwistIsDecisiveAtFirstPower) {
  auto ctx = determinantal_context("0");
  auto sop = polys(ctx.ring(), {"x4 + x5", "x2 - x3"});
  auto report = cover_injectivity_criterion(ctx, sop, 2);
  EXPECT_EQ(report.verdict, CriterionVerdict::DecisiveNotFInjective);
  ASSERT_TRUE(report.witness_e.has_value());
  EXPECT_EQ(*report.witness_e, 1U);
  ASSERT_TRUE(report.witness_holds_at_next.has_value());
  EXPECT_TRUE(*report.witness_holds_at_next);
}

TEST(Criterion, RegularPlane) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto sop = polys(ctx.ring(), {"x", "y"});
  auto report = cover_injectivity_criterion(ctx, sop, 3);
  EXPECT_EQ(report.verdict, CriterionVerdict::NoFailureUpTo);
  EXPECT_EQ(report.e_max, 3U);
  EXPECT_EQ(report.lift->u, parse("x", ctx.ring()));
}

TEST(Criterion, WitnessMonotoneWhenFound) {
  // u = x and f = xy: x^q (xy)^((q-1)/2) is divisible by x^(q+1).
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "x*y");
  auto sop = polys(ctx.ring(), {"x", "y"});
  auto report = cover_injectivity_criterion(ctx, sop, 2);
  ASSERT_TRUE(report.decisive());
  EXPECT_EQ(report.witness_e, 1U);
  ASSERT_TRUE(report.witness_holds_at_next.has_value());
  EXPECT_TRUE(*report.witness_holds_at_next);
}

TEST(Criterion, EvenCharacteristicRejected) {
  auto ctx = make_context(Ring::make(2, {"x", "y"}), {}, {"x"}, "1");
  auto sop = polys(ctx.ring(), {"x", "y"});
  try {
    cover_injectivity_criterion(ctx, sop, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvenCharacteristic);
  }
}

TEST(P2Degeneracy, RegularPlane) {
  auto ctx = make_context(Ring::make(2, {"x", "y"}), {}, {"x"}, "1");
  auto sop = polys(ctx.ring(), {"x", "y"});
  auto report = p2_degeneracy_check(ctx, sop);
  EXPECT_EQ(report.verdict, CriterionVerdict::P2Degenerate);
  EXPECT_EQ(report.lift->u, parse("x", ctx.ring()));
  bool kills = false, in_j = false, square = false;
  for (const auto& c : report.checks) {
    if (c.name == "u_I_in_JI") kills = c.passed;
    if (c.name == "u_in_J") in_j = c.passed;
    if (c.name == "u_squared_in_J_bracket_2") square = c.passed;
  }
  EXPECT_TRUE(kills);
  EXPECT_TRUE(in_j);
  EXPECT_TRUE(square);
}

TEST(P2Degeneracy, OtherEvenInstances) {
  auto cone = make_context(Ring::make(2, {"x", "y", "z"}), {"x*z - y^2"}, {"x"}, "y");
  EXPECT_EQ(p2_degeneracy_check(cone, polys(cone.ring(), {"x", "z"})).verdict,
            CriterionVerdict::P2Degenerate);
  auto space = make_context(Ring::make(2, {"x", "y", "z"}), {}, {"y"}, "x + 1");
  EXPECT_EQ(p2_degeneracy_check(space, polys(space.ring(), {"y", "x", "z"})).verdict,
            CriterionVerdict::P2Degenerate);
}

TEST(P2Degeneracy, OddCharacteristicRejected) {
  auto ctx = make_context(Ring::make(3, {"x", "y"}), {}, {"x"}, "1");
  auto sop = polys(ctx.ring(), {"x", "y"});
  try {
    p2_degeneracy_check(ctx, sop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddCharacteristic);
  }
}

TEST(Fedder, Node) {
  auto r = Ring::make(3, {"x2", "x3"});
  auto result = fedder_test(QuotientPresentation(Ideal::parse(r, {"x2*x3"})));
  EXPECT_TRUE(result.f_pure);
  ASSERT_TRUE(result.witness.has_value());
  EXPECT_EQ(*result.witness, parse("x2^2*x3^2", r));
}

TEST(Fedder, CuspIsNotFPure) {
  auto r = Ring::make(5, {"x", "y"});
  EXPECT_FALSE(fedder_f_pure(QuotientPresentation(Ideal::parse(r, {"y^2 - x^3"}))));
}

TEST(Fedder, CuspPowerInsideBracket) {
  auto r = Ring::make(5, {"x", "y"});
  auto g = parse("y^2 - x^3", r).pow(4);
  for (const auto& t : g.terms()) EXPECT_TRUE(t.mono[0] >= 5 || t.mono[1] >= 5);
}

TEST(Fedder, DeterminantalRing) {
  auto r = testing_support::determinantal_ring();
  EXPECT_TRUE(fedder_f_pure(QuotientPresentation(testing_support::determinantal_ideal(r))));
}

TEST(Fedder, RegularAndOthers) {
  auto r = Ring::make(3, {"x", "y", "z"});
  EXPECT_TRUE(fedder_f_pure(QuotientPresentation(Ideal::zero(r))));
  EXPECT_TRUE(fedder_f_pure(QuotientPresentation(Ideal::parse(r, {"x*z - y^2"}))));
  EXPECT_TRUE(fedder_f_pure(QuotientPresentation(Ideal::parse(r, {"x*y*z"}))));
  EXPECT_FALSE(fedder_f_pure(QuotientPresentation(Ideal::parse(r, {"x^2"}))));
  EXPECT_FALSE(fedder_f_pure(QuotientPresentation(Ideal::parse(r, {"x^3 + y^3 + z^3"}))));
}

TEST(ReducedQuotient, DeterminantalCanonicalQuotient) {
  auto r = testing_support::determinantal_ring();
  QuotientPresentation base(testing_support::determinantal_ideal(r));
  auto reduced = reduced_quotient(base, Ideal::parse(r, {"x1", "x4", "x5"}));
  EXPECT_EQ(reduced.dropped, (std::vector<std::string>{"x1", "x4", "x5"}));
  auto small = reduced.presentation.ring();
  EXPECT_EQ(small->names(), (std::vector<std::string>{"x2", "x3"}));
  EXPECT_EQ(reduced.presentation.defining(), Ideal::parse(small, {"x2*x3"}));
  EXPECT_TRUE(fedder_f_pure(reduced.presentation));
}

TEST(Pipeline, DeterminantalExampleConsistent) {
  auto ctx = determinantal_context("1");
  auto sop = polys(ctx.ring(), {"x4 + x5", "x2 - x3"});
  auto report = run_pipeline(ctx, sop, 2);
  EXPECT_EQ(report.status, PipelineStatus::Consistent);
  EXPECT_TRUE(report.base_fedder.f_pure);
  ASSERT_TRUE(report.canonical_quotient_fedder.has_value());
  EXPECT_TRUE(report.canonical_quotient_fedder->f_pure);
  ASSERT_TRUE(report.criterion.has_value());
  EXPECT_EQ(report.criterion->verdict, CriterionVerdict::NoFailureUpTo);
  ASSERT_TRUE(report.closure.has_value());
  EXPECT_EQ(report.closure->verdict, ClosureVerdict::ClosedUpTo);
  EXPECT_NE(report.conclusion.find("FH-finite"), std::string::npos);
}

TEST(Pipeline, ZeroTwistWithholdsConclusion) {
  auto ctx = determinantal_context("0");
  auto sop = polys(ctx.ring(), {"x4 + x5", "x2 - x3"});
  auto report = run_pipeline(ctx, sop, 2);
  EXPECT_EQ(report.status, PipelineStatus::Counterexample);
  EXPECT_EQ(report.criterion->witness_e, 1U);
  EXPECT_EQ(report.conclusion.find("FH-finite"), std::string::npos);
}

TEST(Pipeline, CuspHypothesesNotMet) {
  auto ctx = make_context(Ring::make(5, {"x", "y"}), {"y^2 - x^3"}, {"x"}, "1");
  auto sop = polys(ctx.ring(), {"x"});
  auto report = run_pipeline(ctx, sop, 2);
  EXPECT_EQ(report.status, PipelineStatus::HypothesesNotMet);
  EXPECT_FALSE(report.base_fedder.f_pure);
  EXPECT_FALSE(report.criterion.has_value());
}

TEST(Pipeline, EvenCharacteristicRejected) {
  auto ctx = make_context(Ring::make(2, {"x", "y"}), {}, {"x"}, "1");
  auto sop = polys(ctx.ring(), {"x", "y"});
  EXPECT_THROW(run_pipeline(ctx, sop, 1), Error);
}

TEST(FindParameters, DeterministicAndUsable) {
  auto ctx = determinantal_context("1");
  auto a = find_parameters(ctx, 7);
  auto b = find_parameters(ctx, 7);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(ctx.base().ideal_contains(ctx.canonical(), a.front()));
  EXPECT_NO_THROW(socle_lift(ctx, a.front(), std::span<const Polynomial>(a).subspan(1)));
}

TEST(CrossModule, FPureRingsHaveFrobeniusClosedParameterIdeals) {
  struct Instance {
    unsigned p;
    std::vector<std::string> vars;
    std::vector<std::string> relations;
    std::vector<std::vector<std::string>> parameters;
  };
  const std::vector<std::string> x5 = {"x1", "x2", "x3", "x4", "x5"};
  std::vector<Instance> corpus = {
      {3, {"x", "y"}, {}, {{"x", "y"}, {"x + y", "x - y"}}},
      {3, {"x2", "x3"}, {"x2*x3"}, {{"x2 + x3"}, {"x2 - x3"}}},
      {5, {"x", "y", "z"}, {"x*z - y^2"}, {{"x", "z"}, {"x + z", "y"}}},
      {3, {"x", "y", "z"}, {"x*y*z"}, {{"x + y", "y + z"}}},
      {3, x5, testing_support::kDeterminantalMinors, {{"x4 + x5", "x2 - x3"}, {"x4 + x5", "x2 + x3"}}},
  };
  for (const auto& inst : corpus) {
    auto r = Ring::make(inst.p, inst.vars);
    std::vector<Polynomial> rel;
    for (const auto& s : inst.relations) rel.push_back(parse(s, r));
    QuotientPresentation q(Ideal(r, rel));
    ASSERT_TRUE(fedder_f_pure(q));
    for (const auto& params : inst.parameters) {
      std::vector<Polynomial> gens;
      for (const auto& s : params) gens.push_back(parse(s, r));
      auto report = frobenius_closure_test(q, Ideal(r, gens), 2);
      EXPECT_EQ(report.verdict, ClosureVerdict::ClosedUpTo);
      EXPECT_FALSE(report.witness.has_value());
    }
  }
}
