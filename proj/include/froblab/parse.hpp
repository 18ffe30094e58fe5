#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "froblab/error.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/ring.hpp"

namespace froblab {

namespace detail {

// Recursive descent over
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := nat | ident | '(' expr ')'
// A leading unary minus is accepted on top of the printed grammar.
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingHandle& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at byte " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Polynomial term() {
    Polynomial value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t n = 0;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected exponent");
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (n > std::numeric_limits<Exponent>::max()) {
        throw Error(ErrorCode::ExponentOverflow,
                    "exponent at byte " + std::to_string(start) + " exceeds 16-bit storage",
                    start);
      }
      ++pos_;
    }
    try {
      return base.pow(n);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ExponentOverflow) throw Error(e.code(), e.what(), start);
      throw;
    }
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& f = ring_->field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = f.add(f.mul(v, 10 % f.characteristic()),
                  static_cast<Coeff>(text_[pos_] - '0') % f.characteristic());
        ++pos_;
      }
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        throw Error(ErrorCode::UnknownVariable,
                    "unknown variable '" + std::string(name) + "' at byte " + std::to_string(start),
                    start);
      }
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingHandle& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse(std::string_view text, const RingHandle& ring) {
  return detail::PolyParser(text, ring).parse();
}

}  // namespace froblab
