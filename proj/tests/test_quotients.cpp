#include <gtest/gtest.h>

#include <random>

#include "froblab/oracle.hpp"
#include "froblab/parse.hpp"
#include "froblab/quotient.hpp"
#include "determinantal_fixture.hpp"
#include "test_support.hpp"

using namespace froblab;

namespace {

QuotientPresentation presentation(const RingHandle& r, std::initializer_list<std::string_view> rel) {
  return QuotientPresentation(Ideal::parse(r, rel));
}

std::vector<Polynomial> polys(const RingHandle& r, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse(t, r));
  return out;
}

void expect_socle_invariants(const QuotientPresentation& r, const SocleBasis& soc) {
  Ideal a = r.extend(soc.parameter);
  for (const auto& b : soc.basis) {
    EXPECT_FALSE(a.contains(b)) << b;
    for (std::size_t i = 0; i < r.ring()->nvars(); ++i) {
      EXPECT_TRUE(a.contains(Polynomial::variable(r.ring(), i) * b)) << b;
    }
  }
}

}  // namespace

TEST(QuotientPresentation, RequiresIdealInsideMaximal) {
  auto r = Ring::make(3, {"x", "y"});
  EXPECT_THROW(presentation(r, {"x - 1"}), Error);
  EXPECT_NO_THROW(presentation(r, {"x*y"}));
}

TEST(IsNzd, SpecExamples) {
  auto r = Ring::make(3, {"x", "y"});
  EXPECT_TRUE(is_nzd(presentation(r, {}), parse("x", r)));
  EXPECT_FALSE(is_nzd(presentation(r, {"x*y"}), parse("x", r)));
  EXPECT_TRUE(is_nzd(presentation(r, {"x*y"}), parse("x + y", r)));
  auto r5 = testing_support::determinantal_ring();
  QuotientPresentation det(testing_support::determinantal_ideal(r5));
  // x1 * (x1 - x2) = (x1^2 - x4*x5) - (x1*x2 - x4*x5) vanishes in R.
  EXPECT_FALSE(is_nzd(det, parse("x1", r5)));
  EXPECT_TRUE(is_nzd(det, parse("x4 + x5", r5)));
  try {
    is_nzd(presentation(r, {"x*y"}), parse("x*y", r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
  }
}

TEST(IsRegularSequence, SpecExamples) {
  auto r = Ring::make(3, {"x", "y"});
  auto poly = presentation(r, {});
  EXPECT_TRUE(is_regular_sequence(poly, polys(r, {"x", "y"})));
  EXPECT_FALSE(is_regular_sequence(poly, polys(r, {"x", "x"})));
  EXPECT_FALSE(is_regular_sequence(poly, polys(r, {"x", "y", "x + y"})));
  auto r23 = Ring::make(3, {"x2", "x3"});
  auto node = presentation(r23, {"x2*x3"});
  EXPECT_FALSE(is_regular_sequence(node, polys(r23, {"x2"})));
  EXPECT_TRUE(is_regular_sequence(node, polys(r23, {"x2 - x3"})));
}

TEST(IsRegularSequence, DeterminantalSop) {
  auto r = testing_support::determinantal_ring();
  QuotientPresentation det(testing_support::determinantal_ideal(r));
  EXPECT_TRUE(is_regular_sequence(det, polys(r, {"x4 + x5", "x2 - x3"})));
  EXPECT_FALSE(is_regular_sequence(det, polys(r, {"x1", "x2 - x3"})));
  EXPECT_FALSE(is_regular_sequence(det, polys(r, {"x1", "x4"})));
}

TEST(Socle, SpecExamples) {
  auto r1 = Ring::make(3, {"x"});
  auto soc1 = socle(presentation(r1, {}), Ideal::parse(r1, {"x^3"}));
  ASSERT_EQ(soc1.dimension(), 1U);
  EXPECT_EQ(soc1.basis[0], parse("x^2", r1));

  auto r23 = Ring::make(3, {"x2", "x3"});
  auto node = presentation(r23, {"x2*x3"});
  auto j = Ideal::parse(r23, {"x2 - x3"});
  auto soc2 = socle(node, j);
  ASSERT_EQ(soc2.dimension(), 1U);
  // Basis is a normal form, so x2 shows up as its representative.
  EXPECT_TRUE(node.extend(j).contains(soc2.basis[0] - parse("x2", r23)));
  expect_socle_invariants(node, soc2);

  auto r = Ring::make(3, {"x", "y"});
  auto fat = presentation(r, {"x^2", "x*y", "y^2"});
  auto soc3 = socle(fat, Ideal::zero(r));
  ASSERT_EQ(soc3.dimension(), 2U);
  EXPECT_EQ(soc3.basis[0], parse("x", r));
  EXPECT_EQ(soc3.basis[1], parse("y", r));
}

TEST(Socle, NotArtinian) {
  auto r = Ring::make(3, {"x", "y"});
  try {
    socle(presentation(r, {}), Ideal::parse(r, {"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotArtinian);
  }
}

TEST(Socle, RandomInvariants) {
  std::mt19937_64 rng(41);
  for (unsigned p : {2U, 3U, 5U}) {
    auto r = Ring::make(p, {"x", "y", "z"});
    QuotientPresentation poly(Ideal::zero(r));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Polynomial> g{parse("x^3", r), parse("y^3", r), parse("z^3", r)};
      for (int k = 0; k < 2; ++k) {
        auto h = testing_support::random_poly(rng, r, 3, 3);
        if (h.constant_term() == 0) g.push_back(h);
      }
      auto soc = socle(poly, Ideal(r, g));
      EXPECT_GE(soc.dimension(), 1U);
      expect_socle_invariants(poly, soc);
    }
  }
}

TEST(FrobeniusClosure, RegularRingIsClosed) {
  auto r = Ring::make(3, {"x", "y"});
  auto report = frobenius_closure_test(presentation(r, {}), Ideal::parse(r, {"x", "y"}), 3);
  EXPECT_EQ(report.verdict, ClosureVerdict::ClosedUpTo);
  EXPECT_FALSE(report.witness);
  EXPECT_TRUE(report.parameters_regular);
  ASSERT_EQ(report.socle_basis.size(), 1U);
  EXPECT_EQ(report.socle_basis[0], parse("1", r));
}

TEST(FrobeniusClosure, QuadricCone) {
  auto r = Ring::make(3, {"x", "y", "z"});
  auto cone = presentation(r, {"z^2 - x*y"});
  auto j = Ideal::parse(r, {"x", "y"});
  auto report = frobenius_closure_test(cone, j, 2);
  EXPECT_EQ(report.verdict, ClosureVerdict::ClosedUpTo);
  ASSERT_EQ(report.socle_basis.size(), 1U);
  EXPECT_EQ(report.socle_basis[0], parse("z", r));
  // z^3 = z * xy modulo the relation, and that is outside (x^3, y^3).
  EXPECT_FALSE(cone.ideal_contains(bracket_power(j, 1), parse("z^3", r)));
}

TEST(FrobeniusClosure, EmptySearch) {
  auto r = Ring::make(5, {"x", "y"});
  auto report = frobenius_closure_test(presentation(r, {"y^2 - x^3"}), Ideal::parse(r, {"x"}), 0);
  EXPECT_EQ(report.verdict, ClosureVerdict::ClosedUpTo);
  EXPECT_EQ(report.e_max, 0U);
}

TEST(FrobeniusClosure, CuspIsNotClosedAndWitnessIsMonotone) {
  for (unsigned p : {3U, 5U}) {
    auto r = Ring::make(p, {"x", "y"});
    auto cusp = presentation(r, {"y^2 - x^3"});
    auto report = frobenius_closure_test(cusp, Ideal::parse(r, {"x"}), 2);
    ASSERT_EQ(report.verdict, ClosureVerdict::NotFrobeniusClosed);
    ASSERT_TRUE(report.witness);
    // y^p = y * (y^2)^((p-1)/2) = y * x^(3(p-1)/2), a multiple of x^p.
    EXPECT_EQ(report.witness->element, parse("y", r));
    EXPECT_EQ(report.witness->e, 1U);
    EXPECT_EQ(report.witness->candidate, 0U);
    EXPECT_EQ(report.witness->holds_at_next, std::optional<bool>(true));
  }
}

TEST(FrobeniusClosure, CombinationEnumeration) {
  auto r3 = Ring::make(3, {"x", "y", "z"});
  auto fat3 = presentation(r3, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"});
  auto full = frobenius_closure_test(fat3, Ideal::zero(r3), 1);
  EXPECT_FALSE(full.partial);
  EXPECT_EQ(full.candidates, 26U);
  // m^2 = 0, so every socle element is nilpotent of order 2.
  EXPECT_TRUE(full.decisive());

  auto r7 = Ring::make(7, {"x", "y", "z"});
  auto fat7 = presentation(r7, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"});
  auto partial = frobenius_closure_test(fat7, Ideal::zero(r7), 1);
  EXPECT_TRUE(partial.partial);
  EXPECT_EQ(partial.candidates, 3U);
}

TEST(ArtinianOracle, SpecExamples) {
  auto r = Ring::make(3, {"x", "y"});
  auto r1 = Ring::make(3, {"x"});
  EXPECT_TRUE(artinian_membership_oracle(Ideal::parse(r1, {"x^2"}), parse("x^2", r1)));
  EXPECT_FALSE(artinian_membership_oracle(Ideal::parse(r, {"x^3", "y^3"}), parse("x^2*y^2", r)));
  std::mt19937_64 rng(42);
  auto a = Ideal::parse(r, {"x^3", "y^3", "x*y - y^2"});
  for (int k = 0; k < 10; ++k) {
    Polynomial g(r);
    for (const auto& gen : a.generators()) g += testing_support::random_poly(rng, r, 3, 3) * gen;
    EXPECT_TRUE(artinian_membership_oracle(a, g));
  }
  try {
    artinian_membership_oracle(Ideal::parse(r, {"x^3", "x*y"}), parse("x", r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotArtinian);
  }
}

TEST(ArtinianOracle, AgreesWithNormalForm) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (unsigned p : {2U, 3U, 5U}) {
    auto r = Ring::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Polynomial> g{parse("x^4", r), parse("y^4", r), parse("z^4", r)};
      for (int k = 0; k < 3; ++k) g.push_back(testing_support::random_poly(rng, r, 3, 3));
      Ideal a(r, g);
      for (int q = 0; q < 3; ++q) {
        // Mix members and non-members.
        Polynomial probe = testing_support::random_poly(rng, r, 4, 4);
        if (q == 0) probe = probe * g[3] + testing_support::random_poly(rng, r, 2, 2) * g[4];
        EXPECT_EQ(artinian_membership_oracle(a, probe), a.contains(probe)) << a << " " << probe;
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Frobenius, WellDefinedOnQuotient) {
  std::mt19937_64 rng(44);
  auto r = testing_support::determinantal_ring();
  QuotientPresentation det(testing_support::determinantal_ideal(r));
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing_support::random_poly(rng, r, 4, 3);
    EXPECT_EQ(det.reduce(frobenius_pow(g, 1)), det.reduce(frobenius_pow(det.reduce(g), 1)));
  }
}
