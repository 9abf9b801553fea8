#include "pspec/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "pspec/error.hpp"

namespace pspec {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Poly>> rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  const std::size_t nvars = cols == 0 ? 0 : rows.front().front().nvars();
  PolyMatrix m(rows.size(), cols, nvars);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ArityError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].nvars() != nvars) throw ArityError("matrix entries over different variable counts");
      m(r, c) = std::move(rows[r][c]);
    }
  }
  return m;
}

std::vector<Poly> PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

PolyMatrix PolyMatrix::columns(std::span<const std::size_t> keep) const {
  PolyMatrix m(rows_, keep.size(), nvars_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) {
      if (keep[c] >= cols_) throw RangeError("column index out of range");
      m(r, c) = (*this)(r, keep[c]);
    }
  }
  return m;
}

namespace {

Poly cofactor_det(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 1) return m(row, cols.front());
  if (k == 2) return m(row, cols[0]) * m(row + 1, cols[1]) - m(row, cols[1]) * m(row + 1, cols[0]);
  Poly det(m.nvars());
  for (std::size_t idx = 0; idx < k; ++idx) {
    const Poly& entry = m(row, cols[idx]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != idx) rest.push_back(cols[j]);
    }
    Poly sub = entry * cofactor_det(m, rest, row + 1);
    if (idx % 2 == 0) {
      det += sub;
    } else {
      det -= sub;
    }
  }
  return det;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ArityError("determinant of a non-square matrix");
  if (m.rows() == 0) return Poly::constant(m.nvars(), 1);
  if (m.rows() > 4) return determinant_bareiss(m);
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return cofactor_det(m, cols, 0);
}

Poly determinant_bareiss(PolyMatrix m) {
  if (m.rows() != m.cols()) throw ArityError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.nvars(), 1);
  bool negate = false;
  Poly prev = Poly::constant(m.nvars(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Poly(m.nvars());
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Poly(m.nvars());
    }
    prev = m(k, k);
  }
  Poly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

std::size_t rank(PolyMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Poly prev = Poly::constant(m.nvars(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    // Every updated entry is a minor of the original matrix, so the division
    // by the previous pivot is exact.
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = exact_quotient(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      }
      m(i, c) = Poly(m.nvars());
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(std::vector<std::vector<Coeff>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Coeff factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

Poly minor_without_columns(const PolyMatrix& m, std::size_t i, std::size_t j) {
  if (i >= m.cols() || j >= m.cols() || i == j) throw RangeError("minor: invalid column pair");
  if (m.cols() != m.rows() + 2) throw ArityError("minor: expected a k x (k+2) matrix");
  std::vector<std::size_t> keep;
  keep.reserve(m.cols() - 2);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c != i && c != j) keep.push_back(c);
  }
  return determinant(m.columns(keep));
}

std::vector<Poly> maximal_minors(const PolyMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  std::vector<Poly> out;
  if (k > n) return out;
  std::vector<std::size_t> keep(k);
  std::iota(keep.begin(), keep.end(), 0);
  while (true) {
    out.push_back(determinant(m.columns(keep)));
    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && keep[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++keep[i - 1];
    for (std::size_t j = i; j < k; ++j) keep[j] = keep[j - 1] + 1;
  }
  return out;
}

}  // namespace pspec
