#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/field.hpp"
#include "froblab/monomial.hpp"
#include "froblab/ring.hpp"

namespace froblab {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept strictly descending in the
/// ring's order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingHandle ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingHandle& ring, std::int64_t c) {
    Polynomial out(ring);
    Coeff v = ring->field().reduce(c);
    if (v != 0) out.terms_.push_back({Monomial(ring->nvars()), v});
    return out;
  }
  static Polynomial variable(const RingHandle& ring, std::size_t index) {
    if (index >= ring->nvars()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
    Monomial m(ring->nvars());
    m.set(index, 1);
    return monomial(ring, m, 1);
  }
  static Polynomial monomial(const RingHandle& ring, const Monomial& m, Coeff c = 1) {
    Polynomial out(ring);
    c %= ring->characteristic();
    if (c != 0) out.terms_.push_back({m, c});
    return out;
  }
  /// Builds a canonical polynomial from terms in any order, with repeats.
  static Polynomial from_terms(const RingHandle& ring, std::vector<Term> terms) {
    Polynomial out(ring);
    out.terms_ = std::move(terms);
    out.normalize();
    return out;
  }
  /// Terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(const RingHandle& ring, std::vector<Term> terms) {
    Polynomial out(ring);
    out.terms_ = std::move(terms);
    return out;
  }

  const RingHandle& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  Coeff constant_term() const noexcept {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
  }
  Coeff coefficient(const Monomial& m) const noexcept {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return 0;
  }
  /// Bitmask of variables occurring in some term.
  std::uint32_t support() const noexcept {
    std::uint32_t mask = 0;
    for (const auto& t : terms_) mask |= t.mono.support();
    return mask;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  Polynomial scaled(Coeff c) const {
    Polynomial out(ring_);
    c %= ring_->characteristic();
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, field().mul(t.coeff, c)});
    return out;
  }

  /// c * m * this; the order is multiplicative so the result stays sorted.
  Polynomial mul_term(const Monomial& m, Coeff c) const {
    Polynomial out(ring_);
    c %= ring_->characteristic();
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return out;
  }

  /// this + c * m * g, by a single merge pass.
  Polynomial add_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const {
    require_same_ring(*ring_, *g.ring_);
    Polynomial out(ring_);
    out.terms_ = merge_axpy(terms_, 0, c, m, g.terms_, *ring_);
    return out;
  }

  Polynomial pow(std::uint64_t n) const {
    if (n > std::numeric_limits<Exponent>::max() && !is_constant()) {
      throw Error(ErrorCode::ExponentOverflow, "power " + std::to_string(n) + " too large");
    }
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (n != 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n != 0) base = base * base;
    }
    return result;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.add_mul_term(1, Monomial(a.ring_->nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.add_mul_term(a.ring_->characteristic() - 1, Monomial(a.ring_->nvars()), b);
  }
  Polynomial operator-() const { return scaled(ring_->characteristic() - 1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(*a.ring_, *b.ring_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    if (small.is_zero()) return Polynomial(a.ring_);
    if (small.size() == 1) return large.mul_term(small.terms_[0].mono, small.terms_[0].coeff);
    std::vector<Term> all;
    all.reserve(small.size() * large.size());
    const auto& f = a.field();
    for (const auto& s : small.terms_) {
      for (const auto& l : large.terms_) all.push_back({s.mono * l.mono, f.mul(s.coeff, l.coeff)});
    }
    return from_terms(a.ring_, std::move(all));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_ring(*a.ring_, *b.ring_);
    return a.terms_ == b.terms_;
  }

  /// Same polynomial, re-expressed in `target`, matching variables by name.
  Polynomial map_to(const RingHandle& target) const {
    if (target->characteristic() != ring_->characteristic()) {
      throw Error(ErrorCode::RingMismatch, "cannot map between different characteristics");
    }
    std::vector<std::optional<std::size_t>> index(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) index[i] = target->index_of(ring_->name(i));
    std::vector<Term> mapped;
    mapped.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!index[i]) {
          throw Error(ErrorCode::UnknownVariable,
                      "variable '" + ring_->name(i) + "' does not exist in the target ring");
        }
        m.set(*index[i], t.mono[i]);
      }
      mapped.push_back({m, t.coeff});
    }
    return from_terms(target, std::move(mapped));
  }

  /// Printing follows the input grammar: descending terms, coefficients in
  /// [1, p), joined by " + ".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k != 0) out += " + ";
      const auto& t = terms_[k];
      std::string mono = monomial_string(t.mono, *ring_);
      if (mono.empty()) {
        out += std::to_string(t.coeff);
      } else if (t.coeff == 1) {
        out += mono;
      } else {
        out += std::to_string(t.coeff) + "*" + mono;
      }
    }
    return out;
  }

  static std::string monomial_string(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += ring.name(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

  /// Merge `a[from..] + c * m * b` (both strictly descending) into a fresh
  /// strictly descending vector.
  static std::vector<Term> merge_axpy(const std::vector<Term>& a, std::size_t from, Coeff c,
                                      const Monomial& m, const std::vector<Term>& b,
                                      const Ring& ring) {
    const auto& f = ring.field();
    const auto& order = ring.order();
    std::vector<Term> out;
    out.reserve(a.size() - from + b.size());
    if (c % ring.characteristic() == 0) {
      out.assign(a.begin() + static_cast<std::ptrdiff_t>(from), a.end());
      return out;
    }
    const bool unit_shift = m.is_one();
    std::size_t i = from;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      Monomial bm = unit_shift ? b[j].mono : b[j].mono * m;
      auto cmp = order.compare(a[i].mono, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bm, f.mul(b[j++].coeff, c)});
      } else {
        Coeff s = f.add(a[i].coeff, f.mul(b[j].coeff, c));
        if (s != 0) out.push_back({bm, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      out.push_back({unit_shift ? b[j].mono : b[j].mono * m, f.mul(b[j].coeff, c)});
    }
    return out;
  }

 private:
  const PrimeField& field() const noexcept { return ring_->field(); }

  void normalize() {
    const auto& order = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    const auto& f = field();
    for (const auto& t : terms_) {
      Coeff c = t.coeff % ring_->characteristic();
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = f.add(out.back().coeff, c);
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back({t.mono, c});
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  RingHandle ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& g) {
  return os << g.to_string();
}

/// g^(p^e) via the additive Frobenius: scale exponents by p^e and raise each
/// coefficient to the p^e-th power.
inline Polynomial frobenius_pow(const Polynomial& g, unsigned e) {
  const Ring& ring = *g.ring();
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) {
    q *= ring.characteristic();
    if (q > std::numeric_limits<Exponent>::max() && !g.is_constant()) {
      throw Error(ErrorCode::ExponentOverflow, "Frobenius power p^e exceeds exponent storage");
    }
  }
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) terms.push_back({t.mono.scaled(q), ring.field().pow(t.coeff, q)});
  // Scaling exponents by q preserves every supported order, so no re-sort.
  return Polynomial::from_sorted_terms(g.ring(), std::move(terms));
}

/// Exact quotient f / g; throws if g does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const Ring& ring = *f.ring();
  Coeff inv_lc = ring.field().inv(g.leading_coeff());
  std::vector<Term> quotient;
  std::vector<Term> rest = f.terms();
  while (!rest.empty()) {
    const Term& lead = rest.front();
    if (!g.leading_monomial().divides(lead.mono)) {
      throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    }
    Monomial m = lead.mono / g.leading_monomial();
    Coeff c = ring.field().mul(lead.coeff, inv_lc);
    quotient.push_back({m, c});
    rest = Polynomial::merge_axpy(rest, 0, ring.field().neg(c), m, g.terms(), ring);
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(quotient));
}

}  // namespace froblab
