#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pspec/monomial.hpp"
#include "pspec/poly.hpp"

namespace pspec {

/// S-pair selection strategy for Buchberger's algorithm. The reduced basis
/// does not depend on it; `fifo` exists to test exactly that.
enum class PairSelection { sugar, fifo };

/// Remainder of multivariate division of f by `divisors` under `order`: no term
/// of the result is divisible by a leading term of a divisor, and f minus the
/// result lies in the ideal they generate.
Poly normal_form(const Poly& f, std::span<const Poly> divisors, const MonomialOrder& order);

/// Reduced Groebner basis (monic, inter-reduced) sorted by descending leading
/// monomial. Empty for the zero ideal; {1} for the unit ideal.
std::vector<Poly> groebner_basis(std::span<const Poly> gens, const MonomialOrder& order,
                                 PairSelection selection = PairSelection::sugar);

/// Ideal of Q[x1..xn] given by generators, with its reduced Groebner basis
/// computed lazily (once, thread-safely) and shared between copies.
class Ideal {
 public:
  Ideal(std::size_t nvars, std::vector<Poly> gens, MonomialOrder order = {});

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  const MonomialOrder& order() const noexcept { return order_; }

  const std::vector<Poly>& basis() const;

  /// Normal form modulo the Groebner basis.
  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const;
  /// 1 is not in the ideal. Since Groebner bases do not change under field
  /// extension this also decides properness over C.
  bool is_proper() const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const;

 private:
  struct Cache;

  std::size_t nvars_;
  std::vector<Poly> gens_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// I intersected with Q[remaining variables], via a block elimination order.
/// The result keeps the ambient variable count; its generators do not involve
/// the dropped variables.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop);

/// I : f^inf = (I + (1 - y f)) intersected with Q[x1..xn], y a fresh variable.
Ideal saturate(const Ideal& ideal, const Poly& f);

}  // namespace pspec
