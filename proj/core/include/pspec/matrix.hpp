#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pspec/coeff.hpp"
#include "pspec/poly.hpp"

namespace pspec {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  static PolyMatrix from_rows(std::vector<std::vector<Poly>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Poly> row(std::size_t r) const;
  /// Submatrix keeping all rows and the given columns, in the given order.
  PolyMatrix columns(std::span<const std::size_t> keep) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> data_;
};

/// Determinant of a square matrix: cofactor expansion up to 4x4, fraction-free
/// (Bareiss) elimination above.
Poly determinant(const PolyMatrix& m);

/// Determinant by fraction-free elimination regardless of size.
Poly determinant_bareiss(PolyMatrix m);

/// Rank over the rational function field, by fraction-free elimination.
std::size_t rank(PolyMatrix m);

/// Rank of a rational matrix.
std::size_t rank(std::vector<std::vector<Coeff>> m);

/// The (rows x rows) minor of a rows x (rows+2) matrix with columns i and j
/// deleted (0-based, i != j).
Poly minor_without_columns(const PolyMatrix& m, std::size_t i, std::size_t j);

/// All maximal minors of a k x n matrix, in lexicographic order of the kept
/// column sets.
std::vector<Poly> maximal_minors(const PolyMatrix& m);

}  // namespace pspec
