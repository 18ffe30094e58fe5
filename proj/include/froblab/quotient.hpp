#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/ideal.hpp"
#include "froblab/linalg.hpp"
#include "froblab/polynomial.hpp"

namespace froblab {

/// The local ring R = k[x_1..x_n]/I localized at m = (x_1, ..., x_n).
/// Elements are represented by polynomials of the ambient ring.
class QuotientPresentation {
 public:
  explicit QuotientPresentation(Ideal defining)
      : defining_(std::move(defining)), maximal_(Ideal::maximal(defining_.ring())) {
    for (const auto& g : defining_.generators()) {
      if (g.constant_term() != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "defining ideal is not contained in the irrelevant ideal: " + g.to_string());
      }
    }
  }

  const RingHandle& ring() const noexcept { return defining_.ring(); }
  const Ideal& defining() const noexcept { return defining_; }
  const Ideal& maximal() const noexcept { return maximal_; }
  Coeff characteristic() const noexcept { return ring()->characteristic(); }
  std::size_t dimension() const { return krull_dimension(defining_); }

  /// Normal form modulo the defining ideal.
  Polynomial reduce(const Polynomial& g) const { return defining_.normal_form(g); }
  bool is_zero(const Polynomial& g) const { return defining_.contains(g); }

  /// Ideal `a` of the ambient ring plus the defining ideal.
  Ideal extend(const Ideal& a) const { return a + defining_; }
  bool ideal_contains(const Ideal& a, const Polynomial& g) const { return extend(a).contains(g); }

  /// The presentation of R / a.
  QuotientPresentation modulo(const Ideal& a) const { return QuotientPresentation(extend(a)); }

 private:
  Ideal defining_;
  Ideal maximal_;
};

/// g is a nonzerodivisor on R iff (I : g) = I.
inline bool is_nzd(const QuotientPresentation& r, const Polynomial& g) {
  if (r.is_zero(g)) {
    throw Error(ErrorCode::ZeroElement, g.to_string() + " is zero in the quotient ring");
  }
  if (r.defining().is_zero()) return true;
  return colon(r.defining(), g) == r.defining();
}

/// Each x_i is a nonzerodivisor modulo I + (x_1..x_{i-1}) and the final
/// quotient is nonzero.
inline bool is_regular_sequence(const QuotientPresentation& r, std::span<const Polynomial> xs) {
  Ideal current = r.defining();
  for (const auto& x : xs) {
    if (current.is_unit()) return false;
    if (current.contains(x)) return false;
    if (!current.is_zero() && !(colon(current, x) == current)) return false;
    current = current + Ideal(r.ring(), {x});
  }
  return !current.is_unit();
}

struct SocleBasis {
  Ideal parameter;
  /// Normal forms modulo J + I, one per basis vector.
  std::vector<Polynomial> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

namespace detail {

// Coordinates of normal forms modulo `a` in its standard-monomial basis,
// which is listed in descending order.
class StandardCoordinates {
 public:
  explicit StandardCoordinates(const Ideal& a) : ideal_(a) {
    monomials_ = standard_monomials(a);
    std::reverse(monomials_.begin(), monomials_.end());
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(key(monomials_[k]), k);
  }

  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  Vector coordinates(const Polynomial& g) const {
    Vector v(monomials_.size(), 0);
    Polynomial nf = ideal_.normal_form(g);
    for (const auto& t : nf.terms()) v[index_.at(key(t.mono))] = t.coeff;
    return v;
  }

  Polynomial polynomial(const Vector& v) const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) terms.push_back({monomials_[k], v[k]});
    }
    return Polynomial::from_terms(ideal_.ring(), std::move(terms));
  }

 private:
  static std::vector<Exponent> key(const Monomial& m) {
    std::vector<Exponent> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = m[i];
    return k;
  }

  const Ideal& ideal_;
  std::vector<Monomial> monomials_;
  std::map<std::vector<Exponent>, std::size_t> index_;
};

}  // namespace detail

/// Socle of the Artinian ring R/J: the common kernel of multiplication by
/// every variable on k[x]/(J + I), solved over the standard monomials.
inline SocleBasis socle(const QuotientPresentation& r, const Ideal& j) {
  Ideal a = r.extend(j);
  SocleBasis out{j, {}};
  if (a.is_unit()) return out;
  detail::StandardCoordinates coords(a);
  const std::size_t n = coords.size();
  std::vector<Vector> rows;
  for (std::size_t var = 0; var < r.ring()->nvars(); ++var) {
    Polynomial x = Polynomial::variable(r.ring(), var);
    std::vector<Vector> images;
    images.reserve(n);
    for (const auto& m : coords.monomials()) {
      images.push_back(coords.coordinates(x.mul_term(m, 1)));
    }
    for (std::size_t row = 0; row < n; ++row) {
      Vector line(n, 0);
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        line[k] = images[k][row];
        any = any || line[k] != 0;
      }
      if (any) rows.push_back(std::move(line));
    }
  }
  for (const auto& v : nullspace(r.ring()->field(), rows, n)) {
    out.basis.push_back(coords.polynomial(v).monic());
  }
  return out;
}

enum class ClosureVerdict { NotFrobeniusClosed, ClosedUpTo };

struct ClosureWitness {
  /// Position in the candidate enumeration (basis vectors and combinations).
  std::size_t candidate;
  Polynomial element;
  unsigned e;
  /// Whether membership persists at e + 1; empty if that power overflows.
  std::optional<bool> holds_at_next;
};

struct ClosureReport {
  ClosureVerdict verdict = ClosureVerdict::ClosedUpTo;
  unsigned e_max = 0;
  std::vector<Polynomial> socle_basis;
  std::size_t candidates = 0;
  /// Only basis vectors were tried; combinations were skipped.
  bool partial = false;
  /// The generators of J form a regular sequence on R.
  bool parameters_regular = false;
  std::optional<ClosureWitness> witness;

  bool decisive() const noexcept { return verdict == ClosureVerdict::NotFrobeniusClosed; }
};

struct ClosureOptions {
  /// Enumerate every nonzero combination of socle vectors when there are at
  /// most this many; otherwise test basis vectors only.
  std::size_t max_combinations = 243;
};

/// Looks for s in the socle of R/J with s^(p^e) ∈ J^[p^e] + I for some
/// 1 <= e <= e_max. Finding one proves J is not Frobenius closed; finding
/// none is bounded evidence only.
inline ClosureReport frobenius_closure_test(const QuotientPresentation& r, const Ideal& j,
                                            unsigned e_max, const ClosureOptions& options = {}) {
  ClosureReport report;
  report.e_max = e_max;
  report.parameters_regular = is_regular_sequence(r, j.generators());
  SocleBasis soc = socle(r, j);
  report.socle_basis = soc.basis;
  const std::uint64_t p = r.characteristic();
  const std::size_t s = soc.dimension();

  std::vector<Polynomial> candidates;
  std::uint64_t combos = 1;
  bool enumerate = true;
  for (std::size_t k = 0; k < s; ++k) {
    combos *= p;
    if (combos > options.max_combinations) {
      enumerate = false;
      break;
    }
  }
  if (enumerate) {
    for (std::uint64_t code = 1; code < combos; ++code) {
      Polynomial c(r.ring());
      std::uint64_t rest = code;
      for (std::size_t k = 0; k < s; ++k) {
        c += soc.basis[k].scaled(static_cast<Coeff>(rest % p));
        rest /= p;
      }
      candidates.push_back(std::move(c));
    }
  } else {
    candidates = soc.basis;
    report.partial = true;
  }
  report.candidates = candidates.size();

  std::vector<std::optional<Ideal>> targets(e_max + 2);
  auto target = [&](unsigned e) -> const Ideal& {
    if (!targets[e]) targets[e] = r.extend(bracket_power(j, e));
    return *targets[e];
  };
  for (std::size_t k = 0; k < candidates.size() && !report.witness; ++k) {
    for (unsigned e = 1; e <= e_max; ++e) {
      if (target(e).contains(frobenius_pow(candidates[k], e))) {
        report.witness = ClosureWitness{k, candidates[k], e, std::nullopt};
        break;
      }
    }
  }
  if (report.witness) {
    report.verdict = ClosureVerdict::NotFrobeniusClosed;
    auto& w = *report.witness;
    try {
      w.holds_at_next = target(w.e + 1).contains(frobenius_pow(w.element, w.e + 1));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ExponentOverflow) throw;
    }
  }
  return report;
}

}  // namespace froblab
