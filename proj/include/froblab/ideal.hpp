#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/groebner.hpp"
#include "froblab/parse.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/ring.hpp"

namespace froblab {

namespace detail {

struct OrderKey {
  MonomialOrder::Kind kind;
  std::size_t block;
  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

// Shared between copies of an Ideal. Each order's basis is computed once.
struct GbCache {
  std::mutex mutex;
  std::map<OrderKey, std::shared_ptr<const GroebnerBasis>> bases;
};

}  // namespace detail

/// Ideal of the ambient polynomial ring, given by generators. Groebner bases
/// are computed lazily and memoized per term order.
class Ideal {
 public:
  Ideal(RingHandle ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {
    for (auto& g : generators) {
      require_same_ring(*ring_, *g.ring());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(const RingHandle& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingHandle& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  /// The irrelevant ideal (x_1, ..., x_n).
  static Ideal maximal(const RingHandle& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars));
  }
  static Ideal parse(const RingHandle& ring, std::span<const std::string> texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(froblab::parse(t, ring));
    return Ideal(ring, std::move(gens));
  }
  static Ideal parse(const RingHandle& ring, std::initializer_list<std::string_view> texts) {
    std::vector<Polynomial> gens;
    for (auto t : texts) gens.push_back(froblab::parse(t, ring));
    return Ideal(ring, std::move(gens));
  }

  const RingHandle& ring() const noexcept { return ring_; }
  /// Nonzero generators, in the order given.
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Reduced Groebner basis in the ring's own order.
  const GroebnerBasis& gb() const { return gb(ring_->order()); }

  /// Reduced Groebner basis for `order`, living in a copy of the ring with
  /// that order.
  const GroebnerBasis& gb(MonomialOrder order) const {
    detail::OrderKey key{order.kind(), order.block()};
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it == cache_->bases.end()) {
      RingHandle target = ring_->order() == order ? ring_ : ring_->with_order(order);
      auto basis = gens_.empty()
                       ? std::make_shared<const GroebnerBasis>(target, std::vector<Polynomial>{})
                       : std::make_shared<const GroebnerBasis>(buchberger(gens_, order));
      it = cache_->bases.emplace(key, std::move(basis)).first;
    }
    return *it->second;
  }

  bool is_unit() const { return gb().is_unit(); }

  Polynomial normal_form(const Polynomial& g) const { return gb().normal_form(g); }
  bool contains(const Polynomial& g) const { return normal_form(g).is_zero(); }
  bool contains(const Ideal& other) const {
    require_same_ring(*ring_, *other.ring_);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Polynomial& g) { return contains(g); });
  }

  /// Extensional equality: reduced grevlex bases coincide.
  friend bool operator==(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring_, *b.ring_);
    return a.gb(MonomialOrder::grevlex()) == b.gb(MonomialOrder::grevlex());
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i != 0) out += ", ";
      out += gens_[i].to_string();
    }
    return out + ")";
  }

 private:
  RingHandle ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

inline std::ostream& operator<<(std::ostream& os, const Ideal& a) { return os << a.to_string(); }

inline Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal operator+(const Ideal& a, const Ideal& b) { return sum(a, b); }

inline Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal operator*(const Ideal& a, const Ideal& b) { return product(a, b); }

/// g * A.
inline Ideal multiply(const Ideal& a, const Polynomial& g) {
  return product(a, Ideal(a.ring(), {g}));
}

/// Frobenius bracket power A^[p^e]: generated by the p^e-th powers of the
/// given generators.
inline Ideal bracket_power(const Ideal& a, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(frobenius_pow(g, e));
  return Ideal(a.ring(), std::move(gens));
}

namespace detail {

inline std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

// Ring with the variables `front` moved to the front (keeping relative
// order) and an elimination order for that block.
inline RingHandle block_ring(const Ring& ring, std::span<const std::string> front,
                             std::span<const std::string> extra = {}) {
  std::vector<std::string> names(extra.begin(), extra.end());
  names.insert(names.end(), front.begin(), front.end());
  for (const auto& n : ring.names()) {
    if (std::find(front.begin(), front.end(), n) == front.end()) names.push_back(n);
  }
  return Ring::make(ring.characteristic(), std::move(names),
                    MonomialOrder::elimination(extra.size() + front.size()));
}

inline Ideal keep_free_of_block(const GroebnerBasis& gb, std::size_t block,
                                const RingHandle& back) {
  std::uint32_t mask = block >= 32 ? ~0U : ((1U << block) - 1U);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.polys()) {
    if ((g.support() & mask) == 0) kept.push_back(g.map_to(back));
  }
  return Ideal(back, std::move(kept));
}

}  // namespace detail

/// A ∩ k[remaining variables], via a block elimination order. The result is
/// expressed in A's ring; its generators avoid the dropped variables.
inline Ideal eliminate(const Ideal& a, std::span<const std::string> drop) {
  for (const auto& name : drop) {
    if (!a.ring()->index_of(name)) {
      throw Error(ErrorCode::UnknownVariable, "cannot eliminate unknown variable '" + name + "'");
    }
  }
  if (a.is_zero()) return a;
  RingHandle elim = detail::block_ring(*a.ring(), drop);
  std::vector<Polynomial> mapped;
  for (const auto& g : a.generators()) mapped.push_back(g.map_to(elim));
  return detail::keep_free_of_block(buchberger(mapped), drop.size(), a.ring());
}

inline Ideal eliminate(const Ideal& a, std::initializer_list<std::string> drop) {
  std::vector<std::string> names(drop);
  return eliminate(a, names);
}

/// A ∩ B via t*A + (1 - t)*B with t eliminated.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  std::vector<std::string> aux{detail::fresh_name(*a.ring(), "t")};
  RingHandle big = detail::block_ring(*a.ring(), {}, aux);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.map_to(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_to(big));
  return detail::keep_free_of_block(buchberger(gens), 1, a.ring());
}

/// (A : g) = (A ∩ (g)) / g.
inline Ideal colon(const Ideal& a, const Polynomial& g) {
  require_same_ring(*a.ring(), *g.ring());
  if (g.is_zero()) throw Error(ErrorCode::ZeroColonDivisor, "colon by the zero ideal");
  if (a.contains(g)) return Ideal::unit(a.ring());
  Ideal meet = intersect(a, Ideal(a.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
  return Ideal(a.ring(), std::move(gens));
}

/// (A : B), intersected over the generators of B.
inline Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (b.is_zero()) throw Error(ErrorCode::ZeroColonDivisor, "colon by the zero ideal");
  std::optional<Ideal> result;
  for (const auto& g : b.generators()) {
    Ideal part = colon(a, g);
    result = result ? intersect(*result, part) : part;
  }
  return *result;
}

/// Dimension of k[x]/A from the leading-term ideal: the largest set of
/// variables containing the support of no leading monomial.
inline std::size_t krull_dimension(const Ideal& a) {
  const auto& gb = a.gb(MonomialOrder::grevlex());
  if (gb.is_unit()) throw Error(ErrorCode::UnitIdeal, "Krull dimension of the zero ring");
  const std::size_t n = a.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t set = 0; set < limit; ++set) {
    auto size = static_cast<std::size_t>(std::popcount(set));
    if (size <= best) continue;
    auto u = static_cast<std::uint32_t>(set);
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~u) == 0; });
    if (independent) best = size;
  }
  return best;
}

/// Monomials outside the leading-term ideal of A (ring order), ascending.
/// They form a basis of the finite-dimensional algebra k[x]/A.
inline std::vector<Monomial> standard_monomials(const Ideal& a) {
  const auto& gb = a.gb();
  const std::size_t n = a.ring()->nvars();
  if (gb.is_unit()) return {};
  auto leads = gb.leading_monomials();
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : leads) {
    auto s = m.support();
    if (std::popcount(s) != 1) continue;
    auto var = static_cast<std::size_t>(std::countr_zero(s));
    if (bound[var] == 0 || m[var] < bound[var]) bound[var] = m[var];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] == 0) {
      throw Error(ErrorCode::NotArtinian,
                  "quotient is not Artinian: no pure power of " + a.ring()->name(i) +
                      " among the leading monomials");
    }
  }
  std::vector<Monomial> out;
  Monomial m(n);
  std::vector<unsigned> exps(n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) m.set(i, exps[i]);
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
      out.push_back(m);
    }
    std::size_t i = 0;
    while (i < n && ++exps[i] == bound[i]) exps[i++] = 0;
    if (i == n) break;
  }
  const auto& order = a.ring()->order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& x, const Monomial& y) { return order.less(x, y); });
  return out;
}

}  // namespace froblab
