#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "froblab/field.hpp"

namespace froblab {

using Vector = std::vector<Coeff>;

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
/// Each stored row is monic at its pivot and no other stored row has a
/// nonzero entry in that pivot column.
class RowSpace {
 public:
  RowSpace(const PrimeField& field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces v against the stored rows in place.
  void reduce(Vector& v) const {
    for (const auto& [pivot, row] : rows_) {
      Coeff c = v[pivot];
      if (c == 0) continue;
      Coeff neg = field_.neg(c);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k] != 0) v[k] = field_.add(v[k], field_.mul(neg, row[k]));
      }
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    for (Coeff c : v) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Adds v to the span; returns false if it was already there.
  bool insert(Vector v) {
    reduce(v);
    std::size_t pivot = dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot == dim_) return false;
    Coeff inv = field_.inv(v[pivot]);
    for (auto& c : v) c = field_.mul(c, inv);
    for (auto& [p, row] : rows_) {
      Coeff c = row[pivot];
      if (c == 0) continue;
      Coeff neg = field_.neg(c);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (v[k] != 0) row[k] = field_.add(row[k], field_.mul(neg, v[k]));
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  /// Rows in pivot order (reduced row echelon form).
  std::vector<Vector> rows() const {
    std::vector<Vector> out;
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::map<std::size_t, Vector> rows_;
};

/// Basis of {v : M v = 0} for an m x n matrix given as rows, in reduced form:
/// each basis vector has a 1 in one free column and 0 in the other free
/// columns. Returned in increasing order of free column.
inline std::vector<Vector> nullspace(const PrimeField& field, const std::vector<Vector>& matrix,
                                     std::size_t ncols) {
  RowSpace space(field, ncols);
  for (const auto& row : matrix) space.insert(row);
  std::vector<Vector> rref = space.rows();
  std::vector<std::size_t> pivots;
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& row : rref) {
    for (std::size_t k = 0; k < ncols; ++k) {
      if (row[k] != 0) {
        pivots.push_back(k);
        is_pivot[k] = 1;
        break;
      }
    }
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rref.size(); ++r) v[pivots[r]] = field.neg(rref[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace froblab
