#pragma once

// Ring-spec files: one `key = value` per line, `#` starts a comment.
// Grammar and examples in docs/ringspec.md.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "froblab/error.hpp"
#include "froblab/ideal.hpp"
#include "froblab/parse.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/ring.hpp"

namespace froblab {

/// A piece of the source text with its absolute byte offset.
struct SourceText {
  std::string text;
  std::size_t offset = 0;
};

struct RingSpec {
  std::uint64_t p = 0;
  std::vector<std::string> vars;
  std::string order = "grevlex";
  std::optional<std::vector<SourceText>> relations;
  std::optional<std::vector<std::vector<SourceText>>> matrix;
  std::optional<std::vector<SourceText>> canonical_ideal;
  std::optional<std::vector<SourceText>> sop;
  std::optional<SourceText> f;
  std::optional<unsigned> e_max;
};

namespace detail {

struct LineCol {
  std::size_t line;
  std::size_t column;
};

inline LineCol locate(std::string_view text, std::size_t offset) {
  LineCol at{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++at.line;
      at.column = 1;
    } else {
      ++at.column;
    }
  }
  return at;
}

[[noreturn]] inline void spec_error(ErrorCode code, std::string_view text, std::size_t offset,
                                    const std::string& message) {
  auto at = locate(text, offset);
  throw Error(code,
              "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " +
                  message,
              offset);
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline SourceText trimmed(std::string_view s, std::size_t offset) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {std::string(s.substr(b, e - b)), offset + b};
}

inline std::vector<SourceText> split_list(std::string_view s, std::size_t offset, char sep) {
  std::vector<SourceText> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trimmed(s.substr(start, i - start), offset + start));
      start = i + 1;
    }
  }
  return out;
}

inline std::vector<SourceText> nonempty_list(std::string_view text, const SourceText& value,
                                             const std::string& key) {
  if (value.text.empty()) return {};
  auto items = split_list(value.text, value.offset, ',');
  for (const auto& item : items) {
    if (item.text.empty()) {
      spec_error(ErrorCode::SyntaxError, text, item.offset, "empty entry in '" + key + "'");
    }
  }
  return items;
}

inline std::vector<std::vector<SourceText>> parse_matrix(std::string_view text,
                                                         const SourceText& value) {
  std::vector<std::vector<SourceText>> rows;
  for (const auto& row : split_list(value.text, value.offset, ';')) {
    const std::string& r = row.text;
    if (r.size() < 2 || r.front() != '[' || r.back() != ']') {
      spec_error(ErrorCode::SyntaxError, text, row.offset, "matrix rows must look like [a, b, ...]");
    }
    auto inner = trimmed(std::string_view(r).substr(1, r.size() - 2), row.offset + 1);
    rows.push_back(nonempty_list(text, inner, "matrix"));
  }
  return rows;
}

}  // namespace detail

/// Parses the key/value layer. Polynomials are kept as text; load_ring_spec
/// turns them into ring elements.
inline RingSpec parse_ring_spec(std::string_view text) {
  using detail::spec_error;
  RingSpec spec;
  std::vector<std::string> seen;
  std::size_t line_start = 0;
  bool have_p = false;
  bool have_vars = false;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto whole = detail::trimmed(line, line_start);
    if (!whole.text.empty()) {
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        spec_error(ErrorCode::SyntaxError, text, whole.offset, "expected 'key = value'");
      }
      auto key = detail::trimmed(line.substr(0, eq), line_start);
      auto value = detail::trimmed(line.substr(eq + 1), line_start + eq + 1);
      if (std::find(seen.begin(), seen.end(), key.text) != seen.end()) {
        spec_error(ErrorCode::SyntaxError, text, key.offset, "duplicate key '" + key.text + "'");
      }
      seen.push_back(key.text);

      if (key.text == "p") {
        std::uint64_t v = 0;
        if (value.text.empty() || value.text.size() > 10 ||
            !std::all_of(value.text.begin(), value.text.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
          spec_error(ErrorCode::SyntaxError, text, value.offset, "p must be a positive integer");
        }
        for (char c : value.text) v = v * 10 + static_cast<std::uint64_t>(c - '0');
        spec.p = v;
        have_p = true;
      } else if (key.text == "vars") {
        for (const auto& v : detail::nonempty_list(text, value, "vars")) {
          if (!Ring::is_identifier(v.text)) {
            spec_error(ErrorCode::SyntaxError, text, v.offset, "bad variable name '" + v.text + "'");
          }
          spec.vars.push_back(v.text);
        }
        have_vars = true;
      } else if (key.text == "order") {
        if (value.text != "grevlex" && value.text != "lex") {
          spec_error(ErrorCode::SyntaxError, text, value.offset, "order must be grevlex or lex");
        }
        spec.order = value.text;
      } else if (key.text == "relations") {
        spec.relations = detail::nonempty_list(text, value, "relations");
      } else if (key.text == "matrix") {
        spec.matrix = detail::parse_matrix(text, value);
      } else if (key.text == "canonical_ideal") {
        spec.canonical_ideal = detail::nonempty_list(text, value, "canonical_ideal");
      } else if (key.text == "sop") {
        spec.sop = detail::nonempty_list(text, value, "sop");
      } else if (key.text == "f") {
        if (value.text.empty()) spec_error(ErrorCode::SyntaxError, text, value.offset, "empty f");
        spec.f = value;
      } else if (key.text == "e_max") {
        unsigned v = 0;
        if (value.text.empty() || value.text.size() > 3 ||
            !std::all_of(value.text.begin(), value.text.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
          spec_error(ErrorCode::SyntaxError, text, value.offset, "e_max must be a small integer");
        }
        for (char c : value.text) v = v * 10 + static_cast<unsigned>(c - '0');
        spec.e_max = v;
      } else {
        spec_error(ErrorCode::SyntaxError, text, key.offset, "unknown key '" + key.text + "'");
      }
    }
    line_start = line_end + 1;
  }
  if (!have_p) throw Error(ErrorCode::MissingField, "ring spec needs 'p'");
  if (!have_vars || spec.vars.empty()) throw Error(ErrorCode::MissingField, "ring spec needs 'vars'");
  if (spec.relations && spec.matrix) {
    throw Error(ErrorCode::InvalidArgument, "'relations' and 'matrix' are mutually exclusive");
  }
  return spec;
}

/// row1[i] row2[j] - row1[j] row2[i] for every column pair i < j.
struct Minor {
  std::size_t i;
  std::size_t j;
  Polynomial value;
};

inline std::vector<Minor> two_by_two_minors(const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != 2) {
    throw Error(ErrorCode::BadMatrixShape,
                "expected 2 rows, got " + std::to_string(rows.size()));
  }
  if (rows[0].size() != rows[1].size()) {
    throw Error(ErrorCode::BadMatrixShape, "rows have different lengths");
  }
  std::vector<Minor> out;
  const std::size_t n = rows[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back({i, j, rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i]});
    }
  }
  return out;
}

struct LoadedSpec {
  RingHandle ring;
  std::optional<std::vector<std::vector<Polynomial>>> matrix;
  /// Defining relations: the file's relations, or the matrix minors.
  std::vector<Polynomial> relations;
  std::optional<Ideal> canonical_ideal;
  std::optional<std::vector<Polynomial>> sop;
  std::optional<Polynomial> f;
  std::optional<unsigned> e_max;

  Ideal defining() const { return Ideal(ring, relations); }
};

inline LoadedSpec load_ring_spec(std::string_view text) {
  RingSpec spec = parse_ring_spec(text);
  LoadedSpec out;
  out.ring = Ring::make(spec.p, spec.vars,
                        spec.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex());
  auto poly = [&](const SourceText& s) {
    try {
      return parse(s.text, out.ring);
    } catch (const Error& e) {
      std::size_t at = s.offset + e.offset().value_or(0);
      std::string message = e.what();
      if (auto cut = message.find(" at byte "); cut != std::string::npos) {
        auto rest = message.find_first_not_of("0123456789", cut + 9);
        message.erase(cut, (rest == std::string::npos ? message.size() : rest) - cut);
      }
      detail::spec_error(e.code(), text, at, message);
    }
  };
  auto polys = [&](const std::vector<SourceText>& items) {
    std::vector<Polynomial> v;
    for (const auto& s : items) v.push_back(poly(s));
    return v;
  };
  if (spec.matrix) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : *spec.matrix) rows.push_back(polys(row));
    for (auto& m : two_by_two_minors(rows)) out.relations.push_back(std::move(m.value));
    out.matrix = std::move(rows);
  } else if (spec.relations) {
    out.relations = polys(*spec.relations);
  }
  if (spec.canonical_ideal) out.canonical_ideal = Ideal(out.ring, polys(*spec.canonical_ideal));
  if (spec.sop) out.sop = polys(*spec.sop);
  if (spec.f) out.f = poly(*spec.f);
  out.e_max = spec.e_max;
  return out;
}

/// Normalized ring-spec text; load_ring_spec of the result gives back the
/// same presentation.
inline std::string emit_ring_spec(const LoadedSpec& s) {
  std::ostringstream out;
  auto join = [&](const std::vector<Polynomial>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? ", " : "") + v[i].to_string();
    return r;
  };
  out << "p = " << s.ring->characteristic() << "\n";
  out << "vars = ";
  for (std::size_t i = 0; i < s.ring->nvars(); ++i) out << (i ? ", " : "") << s.ring->name(i);
  out << "\n";
  out << "order = " << (s.ring->order().kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex")
      << "\n";
  if (s.matrix) {
    out << "matrix = ";
    for (std::size_t r = 0; r < s.matrix->size(); ++r) {
      out << (r ? "; " : "") << "[" << join((*s.matrix)[r]) << "]";
    }
    out << "\n";
  } else {
    out << "relations = " << join(s.relations) << "\n";
  }
  if (s.canonical_ideal) out << "canonical_ideal = " << join(s.canonical_ideal->generators()) << "\n";
  if (s.sop) out << "sop = " << join(*s.sop) << "\n";
  if (s.f) out << "f = " << s.f->to_string() << "\n";
  if (s.e_max) out << "e_max = " << *s.e_max << "\n";
  return out.str();
}

}  // namespace froblab
