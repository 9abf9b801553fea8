#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pspec {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  /// True if the two monomials share no variable.
  bool coprime(const Monomial& other) const noexcept;

  /// Checked product; throws OverflowError when an exponent leaves 32 bits.
  Monomial operator*(const Monomial& other) const;
  /// Quotient; the caller guarantees divisibility (checked, throws DomainError).
  Monomial operator/(const Monomial& other) const;
  Monomial pow(Exponent k) const;

  /// Copy with the exponent of variable `i` set to zero.
  Monomial without(std::size_t i) const;
  Monomial with_nvars(std::size_t nvars) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic comparison of exponent vectors (x1 > x2 > ...); this is only
  /// a container ordering. Use MonomialOrder for term orders.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

enum class OrderKind { lex, grlex, grevlex };

/// A monomial order with x1 > x2 > ... > xn. An elimination order puts the
/// variables of a block first: monomials are compared on the block variables,
/// then on the rest, each time using the inner kind.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind = OrderKind::grevlex) : kind_(kind) {}  // NOLINT

  /// Variables with block[i] == true are eliminated first.
  static MonomialOrder elimination(std::vector<bool> block, OrderKind inner = OrderKind::grevlex);
  /// First `k` of `nvars` variables are greater than all of the rest.
  static MonomialOrder block(std::size_t k, std::size_t nvars, OrderKind inner = OrderKind::grevlex);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  OrderKind kind() const noexcept { return kind_; }
  bool is_elimination() const noexcept { return !block_.empty(); }
  const std::vector<bool>& block_mask() const noexcept { return block_; }
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<bool> block_;
};

OrderKind parse_order_kind(std::string_view name);

}  // namespace pspec
