#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/field.hpp"
#include "froblab/monomial.hpp"

namespace froblab {

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

/// The ambient ring F_p[x_1, ..., x_n] with a fixed term order. Variable
/// order in `names` defines the variable indices.
class Ring {
 public:
  static RingHandle make(std::uint64_t p, std::vector<std::string> names,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const Ring>(Ring(PrimeField(p), std::move(names), order));
  }

  const PrimeField& field() const noexcept { return field_; }
  Coeff characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  RingHandle with_order(MonomialOrder order) const {
    return make(field_.characteristic(), names_, order);
  }

  bool same_as(const Ring& other) const noexcept {
    return this == &other ||
           (field_ == other.field_ && order_ == other.order_ && names_ == other.names_);
  }

  static bool is_identifier(std::string_view s) noexcept {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    for (char c : s) {
      auto uc = static_cast<unsigned char>(c);
      if (!(std::isalnum(uc) || uc == '_')) return false;
    }
    return true;
  }

 private:
  Ring(PrimeField field, std::vector<std::string> names, MonomialOrder order)
      : field_(field), names_(std::move(names)), order_(order) {
    if (names_.size() > kMaxVars) {
      throw Error(ErrorCode::InvalidArgument,
                  "at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i])) {
        throw Error(ErrorCode::InvalidArgument, "bad variable name '" + names_[i] + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[j] == names_[i]) {
          throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + names_[i] + "'");
        }
      }
    }
    if (order_.kind() == MonomialOrder::Kind::Elimination && order_.block() > names_.size()) {
      throw Error(ErrorCode::InvalidArgument, "elimination block larger than variable count");
    }
  }

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

}  // namespace froblab
