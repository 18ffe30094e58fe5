#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "froblab/cover.hpp"
#include "froblab/error.hpp"
#include "froblab/ideal.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/quotient.hpp"

namespace froblab {

enum class CriterionVerdict {
  /// u^q f^((q-1)/2) ∈ J^[q] I for some tested q: S(f) is not F-injective.
  DecisiveNotFInjective,
  /// No membership for q = p, ..., p^e_max. Evidence only.
  NoFailureUpTo,
  /// p = 2: S(f) is never F-injective; both supporting memberships checked.
  P2Degenerate,
};

constexpr std::string_view to_string(CriterionVerdict v) noexcept {
  switch (v) {
    case CriterionVerdict::DecisiveNotFInjective: return "DECISIVE_NOT_F_INJECTIVE";
    case CriterionVerdict::NoFailureUpTo: return "NO_FAILURE_UP_TO";
    case CriterionVerdict::P2Degenerate: return "P2_DEGENERATE";
  }
  return "?";
}

struct NamedCheck {
  std::string name;
  bool passed;
};

struct CriterionReport {
  CriterionVerdict verdict = CriterionVerdict::NoFailureUpTo;
  unsigned e_max = 0;
  /// Smallest e with a membership; present iff the verdict is decisive.
  std::optional<unsigned> witness_e;
  /// Membership re-checked at witness_e + 1; empty if that power overflows.
  std::optional<bool> witness_holds_at_next;
  std::vector<std::string> assumptions;
  std::vector<NamedCheck> checks;
  std::optional<SocleLift> lift;

  bool decisive() const noexcept { return verdict == CriterionVerdict::DecisiveNotFInjective; }
};

namespace detail {

inline std::vector<std::string> cover_assumptions() {
  return {
      "R is Cohen-Macaulay (asserted, not verified)",
      "I is isomorphic to the canonical module of R (asserted; R/I type 1 along the parameters "
      "and x*z socle injectivity verified)",
  };
}

inline SocleLift lift_from_sop(const CoverContext& ctx, std::span<const Polynomial> sop,
                               std::vector<NamedCheck>& checks) {
  if (sop.empty()) {
    throw Error(ErrorCode::InvalidArgument, "system of parameters must be nonempty (d >= 1)");
  }
  bool regular = is_regular_sequence(ctx.base(), sop);
  checks.push_back({"sop_regular_on_R", regular});
  if (!regular) {
    throw Error(ErrorCode::NotRegularSequence, "parameters are not a regular sequence on R");
  }
  auto lift = socle_lift(ctx, sop.front(), sop.subspan(1));
  checks.push_back({"x_in_I", true});
  checks.push_back({"x_nonzerodivisor", true});
  checks.push_back({"tail_regular_on_R_mod_I", true});
  checks.push_back({"tail_regular_on_R_mod_xR", true});
  checks.push_back({"R_mod_I_type_one", true});
  checks.push_back({"m_u_in_JI", true});
  checks.push_back({"u_not_in_JI", true});
  return lift;
}

}  // namespace detail

/// For odd p and q = p^e, e = 1..e_max: is u^q f^((q-1)/2) in J^[q] I (modulo
/// the defining ideal)? A hit at any q means S(f) is not F-injective. u is the
/// socle generator of I/JI obtained from socle_lift with x = sop[0].
inline CriterionReport cover_injectivity_criterion(const CoverContext& ctx,
                                                   std::span<const Polynomial> sop,
                                                   unsigned e_max) {
  const std::uint64_t p = ctx.characteristic();
  if (p == 2) {
    throw Error(ErrorCode::EvenCharacteristic,
                "the membership criterion needs p > 2; use the p = 2 degeneracy check");
  }
  CriterionReport report;
  report.e_max = e_max;
  report.assumptions = detail::cover_assumptions();
  report.lift = detail::lift_from_sop(ctx, sop, report.checks);

  const auto& r = ctx.base();
  const Polynomial& u = report.lift->u;
  auto tested = [&](unsigned e) {
    std::uint64_t q = 1;
    for (unsigned k = 0; k < e; ++k) q *= p;
    Polynomial element = r.reduce(frobenius_pow(u, e)) * r.reduce(ctx.twist().pow((q - 1) / 2));
    Ideal target = r.extend(bracket_power(report.lift->parameters, e) * ctx.canonical());
    return target.contains(element);
  };
  for (unsigned e = 1; e <= e_max; ++e) {
    if (tested(e)) {
      report.verdict = CriterionVerdict::DecisiveNotFInjective;
      report.witness_e = e;
      try {
        report.witness_holds_at_next = tested(e + 1);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::ExponentOverflow) throw;
      }
      return report;
    }
  }
  report.verdict = CriterionVerdict::NoFailureUpTo;
  return report;
}

/// For p = 2: u kills I/JI, hence u ∈ J, hence (ut)^2 = u^2 f ∈ J^[2]S.
/// Verifies u I ⊆ JI, u ∈ J and u^2 ∈ J^[2], then reports P2_DEGENERATE.
inline CriterionReport p2_degeneracy_check(const CoverContext& ctx,
                                                 std::span<const Polynomial> sop) {
  if (ctx.characteristic() != 2) {
    throw Error(ErrorCode::OddCharacteristic, "the degeneracy check applies to p = 2 only");
  }
  CriterionReport report;
  report.assumptions = detail::cover_assumptions();
  report.lift = detail::lift_from_sop(ctx, sop, report.checks);
  const auto& r = ctx.base();
  const auto& lift = *report.lift;

  Ideal ji = r.extend(lift.parameters * ctx.canonical());
  bool kills = true;
  for (const auto& g : ctx.canonical().generators()) kills = kills && ji.contains(lift.u * g);
  report.checks.push_back({"u_I_in_JI", kills});
  bool in_j = r.ideal_contains(lift.parameters, lift.u);
  report.checks.push_back({"u_in_J", in_j});
  bool square = r.ideal_contains(bracket_power(lift.parameters, 1), frobenius_pow(lift.u, 1));
  report.checks.push_back({"u_squared_in_J_bracket_2", square});
  if (!kills || !in_j || !square) {
    throw Error(ErrorCode::InputAssumptionViolation,
                "socle generator of I/JI does not lie in J; I is not a faithful canonical ideal");
  }
  report.verdict = CriterionVerdict::P2Degenerate;
  return report;
}

struct FedderResult {
  bool f_pure = false;
  /// A generator of (I^[p] : I) outside m^[p], when F-pure.
  std::optional<Polynomial> witness;
};

/// Fedder's criterion: k[x]/I is F-pure iff (I^[p] : I) ⊄ m^[p].
inline FedderResult fedder_test(const QuotientPresentation& r) {
  const auto& ring = r.ring();
  if (r.defining().is_zero()) {
    return {true, Polynomial::constant(ring, 1)};
  }
  Ideal frobenius = bracket_power(r.defining(), 1);
  Ideal quotient = colon(frobenius, r.defining());
  Ideal m_bracket = bracket_power(r.maximal(), 1);
  for (const auto& g : quotient.generators()) {
    if (!m_bracket.contains(g)) return {true, m_bracket.normal_form(g)};
  }
  return {false, std::nullopt};
}

inline bool fedder_f_pure(const QuotientPresentation& r) { return fedder_test(r).f_pure; }

/// R/a re-presented over the variables not lying in I + a: each dropped
/// variable is zero in the quotient, so k[rest]/((I + a) ∩ k[rest]) ≅ R/a.
struct ReducedQuotient {
  std::vector<std::string> dropped;
  QuotientPresentation presentation;
};

inline ReducedQuotient reduced_quotient(const QuotientPresentation& r, const Ideal& a) {
  Ideal total = r.extend(a);
  std::vector<std::string> dropped;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < r.ring()->nvars(); ++i) {
    (total.contains(Polynomial::variable(r.ring(), i)) ? dropped : kept)
        .push_back(r.ring()->name(i));
  }
  Ideal remaining = eliminate(total, dropped);
  RingHandle small = Ring::make(r.characteristic(), kept, r.ring()->order().kind() ==
                                                                  MonomialOrder::Kind::Lex
                                                              ? MonomialOrder::lex()
                                                              : MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : remaining.generators()) gens.push_back(g.map_to(small));
  return {std::move(dropped), QuotientPresentation(Ideal(small, std::move(gens)))};
}

enum class PipelineStatus {
  /// Every hypothesis verified and no counterexample up to e_max.
  Consistent,
  /// A decisive failure was found.
  Counterexample,
  /// An F-purity hypothesis fails, so the theorem says nothing.
  HypothesesNotMet,
};

constexpr std::string_view to_string(PipelineStatus s) noexcept {
  switch (s) {
    case PipelineStatus::Consistent: return "CONSISTENT";
    case PipelineStatus::Counterexample: return "COUNTEREXAMPLE";
    case PipelineStatus::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
  }
  return "?";
}

struct PipelineReport {
  FedderResult base_fedder;
  std::optional<ReducedQuotient> canonical_quotient;
  std::optional<FedderResult> canonical_quotient_fedder;
  std::optional<CriterionReport> criterion;
  std::optional<ClosureReport> closure;
  std::vector<std::string> assumptions;
  PipelineStatus status = PipelineStatus::HypothesesNotMet;
  std::string conclusion;
};

/// End-to-end check of the finiteness theorem on one instance, p > 2:
///  1. Fedder on R and on R/I (F-pure implies F-injective);
///  2. regularity of the parameters and the socle lift u = x z;
///  3. the membership criterion for S(f) up to e_max;
///  4. Frobenius closure of (x_2..x_d) in R/I up to e_max.
/// FH-finiteness of R and antinilpotency of the top local cohomology are
/// reported as implied by the theorem when the hypotheses verify and no
/// counterexample turns up. They are never computed.
inline PipelineReport run_pipeline(const CoverContext& ctx, std::span<const Polynomial> sop,
                                   unsigned e_max) {
  if (ctx.characteristic() == 2) {
    throw Error(ErrorCode::EvenCharacteristic, "the finiteness theorem requires p > 2");
  }
  PipelineReport report;
  report.assumptions = detail::cover_assumptions();
  const auto& r = ctx.base();

  report.base_fedder = fedder_test(r);
  if (!report.base_fedder.f_pure) {
    report.status = PipelineStatus::HypothesesNotMet;
    report.conclusion = "withheld: R is not F-pure (Fedder)";
    return report;
  }
  report.canonical_quotient = reduced_quotient(r, ctx.canonical());
  report.canonical_quotient_fedder = fedder_test(report.canonical_quotient->presentation);
  if (!report.canonical_quotient_fedder->f_pure) {
    report.status = PipelineStatus::HypothesesNotMet;
    report.conclusion = "withheld: R/I is not F-pure (Fedder)";
    return report;
  }

  report.criterion = cover_injectivity_criterion(ctx, sop, e_max);
  std::vector<Polynomial> tail(sop.begin() + 1, sop.end());
  report.closure = frobenius_closure_test(r.modulo(ctx.canonical()), Ideal(ctx.ring(), tail), e_max);

  if (report.criterion->decisive()) {
    report.status = PipelineStatus::Counterexample;
    report.conclusion = "withheld: S(f) is not F-injective (witness at e = " +
                        std::to_string(*report.criterion->witness_e) + ")";
  } else if (report.closure->decisive()) {
    report.status = PipelineStatus::Counterexample;
    report.conclusion = "withheld: (x_2..x_d) is not Frobenius closed in R/I";
  } else {
    report.status = PipelineStatus::Consistent;
    report.conclusion = "FH-finite; H^d_m(R) antinilpotent";
  }
  return report;
}

/// Searches for parameters x, x_2..x_d usable by socle_lift: x a random
/// F_p-combination of the generators of I that is a nonzerodivisor, the
/// rest random linear forms, all verified. Deterministic for a given seed.
inline std::vector<Polynomial> find_parameters(const CoverContext& ctx, std::uint64_t seed,
                                               unsigned attempts = 64) {
  const auto& r = ctx.base();
  const RingHandle& ring = ctx.ring();
  const std::size_t d = r.dimension();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "R has dimension 0; no parameters");
  std::mt19937_64 rng(seed);
  const std::uint64_t p = ctx.characteristic();
  auto coeff = [&] { return static_cast<Coeff>(rng() % p); };
  auto r_mod_i = r.modulo(ctx.canonical());

  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    Polynomial x(ring);
    for (const auto& g : ctx.canonical().generators()) x += g.scaled(coeff());
    if (r.is_zero(x) || !is_nzd(r, x)) continue;
    std::vector<Polynomial> tail;
    for (std::size_t k = 1; k < d; ++k) {
      Polynomial l(ring);
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        l += Polynomial::variable(ring, i).scaled(coeff());
      }
      tail.push_back(std::move(l));
    }
    std::vector<Polynomial> sop{x};
    sop.insert(sop.end(), tail.begin(), tail.end());
    if (!is_regular_sequence(r, sop)) continue;
    if (!is_regular_sequence(r_mod_i, tail)) continue;
    if (!is_regular_sequence(r.modulo(Ideal(ring, {x})), tail)) continue;
    return sop;
  }
  throw Error(ErrorCode::NotRegularSequence,
              "no suitable parameters found in " + std::to_string(attempts) + " attempts");
}

}  // namespace froblab
