#pragma once

#include <cstdint>
#include <string>

#include "froblab/error.hpp"

namespace froblab {

using Coeff = std::uint32_t;

/// Arithmetic in F_p for a machine-word prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(static_cast<Coeff>(p)) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw Error(ErrorCode::NotPrime,
                  "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  static constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  Coeff characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(std::uint64_t{a} * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t n) const noexcept {
    Coeff result = 1 % p_;
    Coeff base = a;
    while (n != 0) {
      if (n & 1U) result = mul(result, base);
      base = mul(base, base);
      n >>= 1U;
    }
    return result;
  }
  // Fermat inverse; a must be nonzero.
  Coeff inv(Coeff a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Coeff p_;
};

/// A single element of F_p that remembers its modulus.
class FpScalar {
 public:
  FpScalar(std::int64_t value, const PrimeField& field)
      : field_(field), value_(field.reduce(value)) {}

  Coeff value() const noexcept { return value_; }
  Coeff modulus() const noexcept { return field_.characteristic(); }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar inverse() const { return from_raw(field_.inv(value_)); }
  FpScalar pow(std::uint64_t n) const { return from_raw(field_.pow(value_, n)); }

  friend FpScalar operator+(const FpScalar& a, const FpScalar& b) {
    a.check(b);
    return a.from_raw(a.field_.add(a.value_, b.value_));
  }
  friend FpScalar operator-(const FpScalar& a, const FpScalar& b) {
    a.check(b);
    return a.from_raw(a.field_.sub(a.value_, b.value_));
  }
  friend FpScalar operator*(const FpScalar& a, const FpScalar& b) {
    a.check(b);
    return a.from_raw(a.field_.mul(a.value_, b.value_));
  }
  FpScalar operator-() const { return from_raw(field_.neg(value_)); }

  friend bool operator==(const FpScalar& a, const FpScalar& b) noexcept {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FpScalar from_raw(Coeff v) const {
    FpScalar out = *this;
    out.value_ = v;
    return out;
  }
  void check(const FpScalar& other) const {
    if (!(field_ == other.field_)) {
      throw Error(ErrorCode::RingMismatch, "scalars over different prime fields");
    }
  }

  PrimeField field_;
  Coeff value_;
};

}  // namespace froblab
