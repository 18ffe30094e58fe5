#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/ring.hpp"

namespace froblab {

struct GroebnerOptions {
  /// S-pairs reduced before giving up with BudgetExceeded.
  std::size_t max_pairs = 1'000'000;
};

/// Remainder of multivariate division of `g` by `divisors`, which must be
/// monic. The first divisor (in list order) whose leading monomial divides
/// the current leading term is used.
inline Polynomial reduce(const Polynomial& g, std::span<const Polynomial> divisors) {
  const Ring& ring = *g.ring();
  const auto& field = ring.field();
  std::vector<Term> work = g.terms();
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term lead = work[pos];
    const Polynomial* hit = nullptr;
    for (const auto& d : divisors) {
      if (d.leading_monomial().divides(lead.mono)) {
        hit = &d;
        break;
      }
    }
    if (hit == nullptr) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    Monomial shift = lead.mono / hit->leading_monomial();
    Coeff c = field.neg(field.mul(lead.coeff, field.inv(hit->leading_coeff())));
    // The leading terms cancel; merge the tails only.
    std::vector<Term> tail(hit->terms().begin() + 1, hit->terms().end());
    work = Polynomial::merge_axpy(work, pos + 1, c, shift, tail, ring);
    pos = 0;
  }
  return Polynomial::from_sorted_terms(g.ring(), std::move(remainder));
}

/// Reduced, monic Groebner basis, sorted by descending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingHandle ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingHandle& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& polys() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool empty() const noexcept { return basis_.empty(); }
  bool is_unit() const noexcept { return basis_.size() == 1 && basis_[0].is_constant(); }

  Polynomial normal_form(const Polynomial& g) const {
    require_same_ring(*ring_, *g.ring());
    return reduce(g, basis_);
  }

  bool contains(const Polynomial& g) const { return normal_form(g).is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!a.ring_->same_as(*b.ring_) || a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i) {
      if (a.basis_[i].terms() != b.basis_[i].terms()) return false;
    }
    return true;
  }

 private:
  RingHandle ring_;
  std::vector<Polynomial> basis_;
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Ring& ring = *f.ring();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), ring.field().inv(f.leading_coeff()));
  return a.add_mul_term(ring.field().neg(ring.field().inv(g.leading_coeff())),
                        l / g.leading_monomial(), g);
}

namespace detail {

// Turns a Groebner basis into the reduced one: drop elements whose leading
// monomial is divisible by another's, then tail-reduce and sort.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const Ring& ring) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      // Equal leading monomials: keep the earlier element.
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].monic());
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial& g = minimal[i];
    Polynomial tail = Polynomial::from_sorted_terms(
        g.ring(), std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
    Polynomial reduced_tail = reduce(tail, others);
    std::vector<Term> terms{g.leading_term()};
    terms.insert(terms.end(), reduced_tail.terms().begin(), reduced_tail.terms().end());
    reduced.push_back(Polynomial::from_sorted_terms(g.ring(), std::move(terms)));
  }
  const auto& order = ring.order();
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (least lcm
/// degree, ties broken by pair index) and both of Buchberger's criteria.
/// All generators must share one ring; the ring's order is used.
inline GroebnerBasis buchberger(std::span<const Polynomial> generators,
                                const GroebnerOptions& options = {}) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators given");
  const RingHandle ring = generators.front().ring();
  for (const auto& g : generators) require_same_ring(*ring, *g.ring());

  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    basis.push_back(g.monic());
  }
  if (basis.empty()) return GroebnerBasis(ring, {});

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::vector<std::vector<char>> is_pending;

  auto grow = [&](std::size_t n) {
    for (auto& row : is_pending) row.resize(n, 0);
    is_pending.resize(n, std::vector<char>(n, 0));
  };
  auto add_pairs_for = [&](std::size_t j) {
    grow(basis.size());
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
      is_pending[i][j] = is_pending[j][i] = 1;
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t processed = 0;
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair pair = *best;
    pending.erase(best);
    is_pending[pair.i][pair.j] = is_pending[pair.j][pair.i] = 0;

    const auto& lm_i = basis[pair.i].leading_monomial();
    const auto& lm_j = basis[pair.j].leading_monomial();
    if (lm_i.coprime(lm_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leading_monomial().divides(pair.lcm) && !is_pending[pair.i][k] &&
          !is_pending[pair.j][k]) {
        chain = true;
      }
    }
    if (chain) continue;

    if (++processed > options.max_pairs) {
      throw Error(ErrorCode::BudgetExceeded,
                  "Groebner basis exceeded the budget of " + std::to_string(options.max_pairs) +
                      " S-pairs");
    }
    Polynomial h = reduce(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis(ring, detail::interreduce(std::move(basis), *ring));
}

/// Groebner basis with respect to `order`; generators are moved into a copy
/// of their ring carrying that order, and so is the result.
inline GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order,
                                const GroebnerOptions& options = {}) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators given");
  RingHandle target = generators.front().ring()->with_order(order);
  std::vector<Polynomial> mapped;
  mapped.reserve(generators.size());
  for (const auto& g : generators) {
    require_same_ring(*generators.front().ring(), *g.ring());
    mapped.push_back(g.map_to(target));
  }
  return buchberger(mapped, options);
}

}  // namespace froblab
