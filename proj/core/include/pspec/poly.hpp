#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pspec/coeff.hpp"
#include "pspec/monomial.hpp"

namespace pspec {

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in descending graded reverse lexicographic order with
/// no zero coefficients, so two polynomials are equal exactly when their term
/// vectors are equal. Values are immutable once built; every operation returns
/// a fresh polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Coeff& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly from_monomial(Monomial m, const Coeff& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;

  /// Leading term under the canonical graded reverse lexicographic order.
  /// Precondition: non-zero.
  const Term& leading_term() const { return terms_.front(); }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }
  /// Leading term under an arbitrary order. Precondition: non-zero.
  const Term& leading_term(const MonomialOrder& order) const;

  /// Total degree; zero for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  Exponent degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  Coeff constant_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Coeff& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Coeff& c) { return a *= c; }
  friend Poly operator*(const Coeff& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, const Term& t);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Scales so the canonical leading coefficient is 1. Zero stays zero.
  Poly monic() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Poly pow(const Poly& p, std::uint32_t k);

/// Partial derivative with respect to variable `var` (0-based).
Poly derivative(const Poly& p, std::size_t var);

/// Gradient (d/dx_1, ..., d/dx_n).
std::vector<Poly> gradient(const Poly& p);

/// Value at a rational point.
Coeff evaluate(const Poly& p, std::span<const Coeff> point);

/// Ring homomorphism x_i -> images[i].
Poly substitute(const Poly& p, std::span<const Poly> images);

/// Pads with unused variables, or drops trailing variables that must not occur.
Poly with_nvars(const Poly& p, std::size_t nvars);

/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);

/// Quotient a / b; throws DomainError when the division is not exact.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized to canonical leading coefficient 1.
/// Throws DomainError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Highest total degree any product or power may reach. Read from the
/// PSPEC_MAX_DEGREE environment variable on first use, default 64.
std::uint64_t max_total_degree();
void set_max_total_degree(std::uint64_t limit);

/// Compares monomials by descending graded reverse lexicographic order.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace pspec
