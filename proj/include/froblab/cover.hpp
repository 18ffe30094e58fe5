#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/ideal.hpp"
#include "froblab/linalg.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/quotient.hpp"

namespace froblab {

/// Data of a pseudocanonical cover S(f) = R + I t inside R[T]/(T^2 - f):
/// the base ring R, an ideal I of R isomorphic to its canonical module, and
/// the twisting element f (any element of R, units included).
///
/// I must be proper and nonzero in R. Properness is taken in the local
/// sense, I ⊆ m, which is what makes S(f) local with maximal ideal m + I t.
class CoverContext {
 public:
  CoverContext(QuotientPresentation base, Ideal canonical, Polynomial twist) {
    require_same_ring(*base.ring(), *canonical.ring());
    require_same_ring(*base.ring(), *twist.ring());
    for (const auto& g : canonical.generators()) {
      if (g.constant_term() != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "canonical ideal must lie in the maximal ideal; generator " + g.to_string());
      }
    }
    if (base.defining().contains(canonical)) {
      throw Error(ErrorCode::InvalidArgument, "canonical ideal is zero in the base ring");
    }
    Polynomial reduced = base.reduce(twist);
    data_ = std::make_shared<const Data>(
        Data{std::move(base), std::move(canonical), std::move(reduced)});
  }

  const QuotientPresentation& base() const noexcept { return data_->base; }
  const RingHandle& ring() const noexcept { return data_->base.ring(); }
  const Ideal& canonical() const noexcept { return data_->canonical; }
  const Polynomial& twist() const noexcept { return data_->twist; }
  Coeff characteristic() const noexcept { return ring()->characteristic(); }

  const void* identity() const noexcept { return data_.get(); }

 private:
  struct Data {
    QuotientPresentation base;
    Ideal canonical;
    Polynomial twist;
  };
  std::shared_ptr<const Data> data_;
};

/// a + b t with a ∈ R and b ∈ I, both stored as normal forms modulo the
/// defining ideal of R.
class CoverElement {
 public:
  const Polynomial& a() const noexcept { return a_; }
  const Polynomial& b() const noexcept { return b_; }

  friend bool operator==(const CoverElement& x, const CoverElement& y) {
    return x.owner_ == y.owner_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const {
    return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*t";
  }

 private:
  friend CoverElement make_element(const CoverContext&, const Polynomial&, const Polynomial&);
  friend CoverElement unchecked_element(const CoverContext&, Polynomial, Polynomial);
  CoverElement(const void* owner, Polynomial a, Polynomial b)
      : owner_(owner), a_(std::move(a)), b_(std::move(b)) {}

  friend void require_context(const CoverContext& ctx, const CoverElement& u) {
    if (u.owner_ != ctx.identity()) {
      throw Error(ErrorCode::ContextMismatch, "cover element belongs to a different cover");
    }
  }

  const void* owner_;
  Polynomial a_;
  Polynomial b_;
};

/// a + b t, checking b ∈ I + (defining ideal).
inline CoverElement make_element(const CoverContext& ctx, const Polynomial& a,
                                 const Polynomial& b) {
  require_same_ring(*ctx.ring(), *a.ring());
  require_same_ring(*ctx.ring(), *b.ring());
  if (!ctx.base().ideal_contains(ctx.canonical(), b)) {
    throw Error(ErrorCode::NotInCanonicalIdeal,
                "t-coefficient " + b.to_string() + " is not in the canonical ideal");
  }
  return CoverElement(ctx.identity(), ctx.base().reduce(a), ctx.base().reduce(b));
}

// For results that are in I by construction.
inline CoverElement unchecked_element(const CoverContext& ctx, Polynomial a, Polynomial b) {
  return CoverElement(ctx.identity(), ctx.base().reduce(a), ctx.base().reduce(b));
}

inline CoverElement cover_one(const CoverContext& ctx) {
  return unchecked_element(ctx, Polynomial::constant(ctx.ring(), 1), Polynomial(ctx.ring()));
}

inline CoverElement cover_zero(const CoverContext& ctx) {
  return unchecked_element(ctx, Polynomial(ctx.ring()), Polynomial(ctx.ring()));
}

inline CoverElement cover_add(const CoverContext& ctx, const CoverElement& u,
                              const CoverElement& v) {
  require_context(ctx, u);
  require_context(ctx, v);
  return unchecked_element(ctx, u.a() + v.a(), u.b() + v.b());
}

inline CoverElement cover_neg(const CoverContext& ctx, const CoverElement& u) {
  require_context(ctx, u);
  return unchecked_element(ctx, -u.a(), -u.b());
}

/// (a + bt)(c + dt) = (ac + bdf) + (ad + bc)t, using t^2 = f.
inline CoverElement cover_mul(const CoverContext& ctx, const CoverElement& u,
                              const CoverElement& v) {
  require_context(ctx, u);
  require_context(ctx, v);
  return unchecked_element(ctx, u.a() * v.a() + u.b() * v.b() * ctx.twist(),
                           u.a() * v.b() + u.b() * v.a());
}

/// u^n by repeated multiplication.
inline CoverElement cover_pow(const CoverContext& ctx, const CoverElement& u, std::uint64_t n) {
  CoverElement result = cover_one(ctx);
  for (std::uint64_t k = 0; k < n; ++k) result = cover_mul(ctx, result, u);
  return result;
}

/// a + bt is a unit of the local ring S(f) iff a ∉ m. Since I ⊆ m, the
/// element b^2 f - a^2 is then a unit of R, and (a + bt)^{-1} =
/// (a - bt) / (a^2 - b^2 f).
inline bool cover_is_unit(const CoverContext& ctx, const CoverElement& u) {
  require_context(ctx, u);
  return u.a().constant_term() != 0;
}

/// (a + bt)^q = a^q + b^q f^((q-1)/2) t for q = p^e with p odd: the cross
/// terms vanish by additivity of Frobenius and t^q = f^((q-1)/2) t.
inline CoverElement cover_frobenius(const CoverContext& ctx, const CoverElement& u, unsigned e) {
  require_context(ctx, u);
  const std::uint64_t p = ctx.characteristic();
  if (p == 2) {
    throw Error(ErrorCode::EvenCharacteristic,
                "cover Frobenius formula needs odd characteristic; use the p = 2 check");
  }
  if (e == 0) return u;
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) q *= p;
  Polynomial twist_power = ctx.base().reduce(ctx.twist().pow((q - 1) / 2));
  return unchecked_element(ctx, frobenius_pow(u.a(), e),
                           ctx.base().reduce(frobenius_pow(u.b(), e)) * twist_power);
}

/// Socle generators of R/(I + (x_2..x_d)) and of I/JI, linked by z -> x z.
struct SocleLift {
  Polynomial x;
  std::vector<Polynomial> tail;
  /// J = (x, x_2, ..., x_d).
  Ideal parameters;
  /// Socle generator of R/(I + (x_2..x_d)).
  Polynomial z;
  /// u = x z, socle generator of I/JI.
  Polynomial u;
};

/// Lifts the socle of the Gorenstein ring R/I along x: for a canonical
/// ideal I, a nonzerodivisor x ∈ I and x_2..x_d regular on R/I and R/xR,
/// multiplication by x embeds Soc(R/(I + (x_2..x_d))) into Soc(I/JI) and
/// both are one-dimensional, so u = x z generates the socle of I/JI.
///
/// Checks every hypothesis it can see and both postconditions: m u ⊆ JI and
/// u ∉ JI (modulo the defining ideal).
inline SocleLift socle_lift(const CoverContext& ctx, const Polynomial& x,
                            std::span<const Polynomial> tail) {
  const auto& r = ctx.base();
  require_same_ring(*ctx.ring(), *x.ring());
  if (!r.ideal_contains(ctx.canonical(), x)) {
    throw Error(ErrorCode::NotInCanonicalIdeal, x.to_string() + " is not in the canonical ideal");
  }
  if (r.is_zero(x) || !is_nzd(r, x)) {
    throw Error(ErrorCode::NotNZD, x.to_string() + " is a zero divisor on R");
  }
  auto r_mod_i = r.modulo(ctx.canonical());
  if (!is_regular_sequence(r_mod_i, tail)) {
    throw Error(ErrorCode::NotRegularSequence, "tail is not a regular sequence on R/I");
  }
  if (!is_regular_sequence(r.modulo(Ideal(ctx.ring(), {x})), tail)) {
    throw Error(ErrorCode::NotRegularSequence, "tail is not a regular sequence on R/xR");
  }
  std::vector<Polynomial> tail_vec(tail.begin(), tail.end());
  auto soc = socle(r_mod_i, Ideal(ctx.ring(), tail_vec));
  if (soc.dimension() != 1) {
    throw Error(ErrorCode::TypeNotOne, "R/(I + tail) has socle dimension " +
                                           std::to_string(soc.dimension()) + ", expected 1");
  }
  std::vector<Polynomial> sop{x};
  sop.insert(sop.end(), tail.begin(), tail.end());
  Ideal j(ctx.ring(), sop);
  Polynomial z = soc.basis.front();
  Polynomial u = r.reduce(x * z);

  Ideal ji = r.extend(j * ctx.canonical());
  for (std::size_t i = 0; i < ctx.ring()->nvars(); ++i) {
    if (!ji.contains(Polynomial::variable(ctx.ring(), i) * u)) {
      throw Error(ErrorCode::InjectivityFailure,
                  "x*z is not killed by m modulo JI; is I a canonical ideal?");
    }
  }
  if (ji.contains(u)) {
    throw Error(ErrorCode::InjectivityFailure,
                "x*z lies in JI, so z -> xz is not injective on socles; is I a canonical ideal?");
  }
  return SocleLift{x, std::move(tail_vec), std::move(j), std::move(z), std::move(u)};
}

/// Socle of S/JS computed directly, as a subspace of (R/JR) ⊕ (I/JI)t.
///
/// a + bt lies in the socle iff (m + It)(a + bt) ⊆ JS, i.e. for every
/// variable x and every generator g of I:
///   x a ∈ JR,  x b ∈ JI,  g b f ∈ JR,  g a ∈ JI.
/// R/JR is coordinatized by standard monomials; I/JI by a basis picked from
/// the spanning set {m g : m standard for JR, g a generator of I}.
inline std::vector<CoverElement> cover_socle(const CoverContext& ctx,
                                             std::span<const Polynomial> sop) {
  const auto& r = ctx.base();
  const RingHandle& ring = ctx.ring();
  const auto& field = ring->field();
  std::vector<Polynomial> sop_vec(sop.begin(), sop.end());
  Ideal j(ring, sop_vec);
  Ideal jr = r.extend(j);
  Ideal ji = r.extend(j * ctx.canonical());
  detail::StandardCoordinates coords(jr);

  // Sparse monomial columns for vectors living modulo JI.
  auto columns_of = [](const std::vector<Polynomial>& polys) {
    std::map<std::vector<Exponent>, std::size_t> cols;
    for (const auto& g : polys) {
      for (const auto& t : g.terms()) {
        std::vector<Exponent> k(t.mono.size());
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = t.mono[i];
        cols.emplace(std::move(k), 0);
      }
    }
    std::size_t n = 0;
    for (auto& [k, v] : cols) v = n++;
    return cols;
  };
  auto to_vec = [&](const Polynomial& g, const std::map<std::vector<Exponent>, std::size_t>& cols) {
    Vector v(cols.size(), 0);
    for (const auto& t : g.terms()) {
      std::vector<Exponent> k(t.mono.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = t.mono[i];
      v[cols.at(k)] = t.coeff;
    }
    return v;
  };

  // Basis of I/JI.
  std::vector<Polynomial> spanning;
  for (const auto& m : coords.monomials()) {
    for (const auto& g : ctx.canonical().generators()) {
      spanning.push_back(ji.normal_form(g.mul_term(m, 1)));
    }
  }
  std::vector<Polynomial> module_basis;
  {
    auto cols = columns_of(spanning);
    RowSpace span(field, cols.size());
    for (const auto& g : spanning) {
      if (span.insert(to_vec(g, cols))) module_basis.push_back(g);
    }
  }

  const std::size_t na = coords.size();
  const std::size_t nb = module_basis.size();
  const std::size_t n = na + nb;
  std::vector<Polynomial> domain_a;
  for (const auto& m : coords.monomials()) domain_a.push_back(Polynomial::monomial(ring, m));

  std::vector<Vector> rows;
  // Conditions landing in R/JR: coordinates over standard monomials.
  auto add_rows_mod_jr = [&](const std::vector<Polynomial>& images, std::size_t offset) {
    std::vector<Vector> cols;
    for (const auto& g : images) cols.push_back(coords.coordinates(g));
    for (std::size_t row = 0; row < na; ++row) {
      Vector line(n, 0);
      for (std::size_t k = 0; k < images.size(); ++k) line[offset + k] = cols[k][row];
      rows.push_back(std::move(line));
    }
  };
  // Conditions landing in I/JI: normal forms modulo JI on sparse columns.
  auto add_rows_mod_ji = [&](const std::vector<Polynomial>& images, std::size_t offset) {
    std::vector<Polynomial> nfs;
    for (const auto& g : images) nfs.push_back(ji.normal_form(g));
    auto cols = columns_of(nfs);
    std::vector<Vector> vecs;
    for (const auto& g : nfs) vecs.push_back(to_vec(g, cols));
    for (std::size_t row = 0; row < cols.size(); ++row) {
      Vector line(n, 0);
      for (std::size_t k = 0; k < images.size(); ++k) line[offset + k] = vecs[k][row];
      rows.push_back(std::move(line));
    }
  };

  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial x = Polynomial::variable(ring, i);
    std::vector<Polynomial> xa;
    for (const auto& a : domain_a) xa.push_back(x * a);
    add_rows_mod_jr(xa, 0);
    std::vector<Polynomial> xb;
    for (const auto& b : module_basis) xb.push_back(x * b);
    add_rows_mod_ji(xb, na);
  }
  for (const auto& g : ctx.canonical().generators()) {
    std::vector<Polynomial> gbf;
    for (const auto& b : module_basis) gbf.push_back(g * b * ctx.twist());
    add_rows_mod_jr(gbf, na);
    std::vector<Polynomial> ga;
    for (const auto& a : domain_a) ga.push_back(g * a);
    add_rows_mod_ji(ga, 0);
  }

  std::vector<CoverElement> out;
  for (const auto& v : nullspace(field, rows, n)) {
    Polynomial a(ring);
    Polynomial b(ring);
    for (std::size_t k = 0; k < na; ++k) a += domain_a[k].scaled(v[k]);
    for (std::size_t k = 0; k < nb; ++k) b += module_basis[k].scaled(v[na + k]);
    out.push_back(unchecked_element(ctx, jr.normal_form(a), ji.normal_form(b)));
  }
  return out;
}

}  // namespace froblab
