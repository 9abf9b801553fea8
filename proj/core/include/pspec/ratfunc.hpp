#pragma once

#include <cstddef>

#include "pspec/poly.hpp"

namespace pspec {

/// Rational function num/den in lowest terms. The denominator is non-zero
/// with canonical leading coefficient 1; zero is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num);  // NOLINT: polynomials are rational functions
  /// Reduces to lowest terms. Throws DomainError for a zero denominator.
  RatFunc(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  Poly den_;
};

/// Quotient rule: d/dx_var (p/q) = (q p' - p q') / q^2.
RatFunc derivative(const RatFunc& f, std::size_t var);

}  // namespace pspec
