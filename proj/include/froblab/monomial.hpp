#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>

#include "froblab/error.hpp"

namespace froblab {

using Exponent = std::uint16_t;

/// Largest number of ring variables, including auxiliary variables added by
/// elimination.
inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector with inline storage. Unused slots are always zero, so
/// equality and hashing can look at the whole array.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(checked_size(nvars)) {}
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }
  explicit Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  std::size_t size() const noexcept { return n_; }
  std::uint32_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint64_t e) {
    if (e > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorCode::ExponentOverflow,
                  "exponent " + std::to_string(e) + " exceeds 16-bit storage");
    }
    degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(e);
    exps_[i] = static_cast<Exponent>(e);
  }

  /// Bitmask of variables with nonzero exponent.
  std::uint32_t support() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (exps_[i] != 0) mask |= (1U << i);
    }
    return mask;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      out.set(i, std::uint64_t{a.exps_[i]} + b.exps_[i]);
    }
    return out;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      out.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    }
    out.degree_ = a.degree_ - b.degree_;
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      out.set(i, std::max(a.exps_[i], b.exps_[i]));
    }
    return out;
  }

  /// Every exponent multiplied by `factor`; overflow is an error.
  Monomial scaled(std::uint64_t factor) const {
    Monomial out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (exps_[i] != 0 && factor > std::numeric_limits<Exponent>::max() / exps_[i]) {
        throw Error(ErrorCode::ExponentOverflow,
                    "Frobenius power overflows 16-bit exponent storage");
      }
      out.set(i, exps_[i] * factor);
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003U + exps_[i];
    return h;
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVars) {
      throw Error(ErrorCode::InvalidArgument,
                  "at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t n_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Term orders. `Elimination` compares the first `block` variables by
/// grevlex, then breaks ties with grevlex on the remaining variables, so any
/// monomial involving the first block beats every monomial free of it.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Elimination };

  static constexpr MonomialOrder lex() noexcept { return {Kind::Lex, 0}; }
  static constexpr MonomialOrder grevlex() noexcept { return {Kind::Grevlex, 0}; }
  static constexpr MonomialOrder elimination(std::size_t block) noexcept {
    return {Kind::Elimination, block};
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::size_t block() const noexcept { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::Grevlex: return "grevlex";
      case Kind::Elimination: return "elim" + std::to_string(block_);
    }
    return "?";
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        return std::strong_ordering::equal;
      case Kind::Grevlex:
        return grevlex_range(a, b, 0, a.size());
      case Kind::Elimination: {
        auto head = grevlex_range(a, b, 0, block_);
        if (head != 0) return head;
        return grevlex_range(a, b, block_, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                            std::size_t lo, std::size_t hi) noexcept {
    std::uint32_t da = 0;
    std::uint32_t db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i > lo; --i) {
      if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace froblab
