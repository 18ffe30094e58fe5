#pragma once

#include <bit>
#include <cstddef>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/ideal.hpp"
#include "froblab/linalg.hpp"
#include "froblab/polynomial.hpp"

namespace froblab {

/// Finite-dimensional model of k[x]/A that never touches a Groebner basis.
///
/// A must list a pure power x_i^{b_i} of every variable among its
/// generators. Then k[x]/A is a quotient of the box algebra
/// k[x]/(x_1^{b_1}, ..., x_n^{b_n}), whose monomial basis is the box of
/// exponent vectors below the bounds, and the image of A there is spanned by
/// (box monomial) * (generator), truncated to the box. Everything is plain
/// row reduction over F_p.
class ArtinianTruncation {
 public:
  explicit ArtinianTruncation(const Ideal& a)
      : ring_(a.ring()), bounds_(pure_power_bounds(a)), space_(ring_->field(), box_size()) {
    for (const auto& g : a.generators()) {
      for (std::size_t k = 0; k < space_.dim(); ++k) {
        space_.insert(to_vector(g.mul_term(box_monomial(k), 1)));
      }
    }
  }

  const RingHandle& ring() const noexcept { return ring_; }
  std::size_t box_size() const noexcept {
    std::size_t n = 1;
    for (auto b : bounds_) n *= b;
    return n;
  }
  /// Rank of the image of A in the box algebra.
  std::size_t ideal_rank() const noexcept { return space_.rank(); }
  /// dim_k k[x]/A.
  std::size_t quotient_dimension() const noexcept { return box_size() - space_.rank(); }
  const RowSpace& ideal_space() const noexcept { return space_; }

  Monomial box_monomial(std::size_t index) const {
    Monomial m(bounds_.size());
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
      m.set(i, index % bounds_[i]);
      index /= bounds_[i];
    }
    return m;
  }

  /// Coordinates in the box basis; monomials outside the box lie in A and
  /// are dropped.
  Vector to_vector(const Polynomial& g) const {
    Vector v(box_size(), 0);
    for (const auto& t : g.terms()) {
      std::size_t index = 0;
      std::size_t stride = 1;
      bool inside = true;
      for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (t.mono[i] >= bounds_[i]) {
          inside = false;
          break;
        }
        index += t.mono[i] * stride;
        stride *= bounds_[i];
      }
      if (inside) v[index] = ring_->field().add(v[index], t.coeff);
    }
    return v;
  }

  Polynomial to_polynomial(const Vector& v) const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) terms.push_back({box_monomial(k), v[k]});
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  bool contains(const Polynomial& g) const {
    require_same_ring(*ring_, *g.ring());
    return space_.contains(to_vector(g));
  }

 private:
  static std::vector<unsigned> pure_power_bounds(const Ideal& a) {
    const std::size_t n = a.ring()->nvars();
    std::vector<unsigned> bounds(n, 0);
    for (const auto& g : a.generators()) {
      if (g.size() != 1) continue;
      const auto& m = g.leading_monomial();
      auto s = m.support();
      if (s == 0) {
        // A unit generator: the quotient is zero, any positive box works.
        for (auto& b : bounds) {
          if (b == 0) b = 1;
        }
        continue;
      }
      if ((s & (s - 1)) != 0) continue;
      auto var = static_cast<std::size_t>(std::countr_zero(s));
      if (bounds[var] == 0 || m[var] < bounds[var]) bounds[var] = m[var];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (bounds[i] == 0) {
        throw Error(ErrorCode::NotArtinian,
                    "membership oracle needs a pure power of " + a.ring()->name(i) +
                        " among the generators");
      }
    }
    return bounds;
  }

  RingHandle ring_;
  std::vector<unsigned> bounds_;
  RowSpace space_;
};

/// Brute-force membership g ∈ A for Artinian A, independent of normal forms.
inline bool artinian_membership_oracle(const Ideal& a, const Polynomial& g) {
  return ArtinianTruncation(a).contains(g);
}

}  // namespace froblab
