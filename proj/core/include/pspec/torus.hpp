#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pspec/coeff.hpp"
#include "pspec/poly.hpp"
#include "pspec/structure.hpp"

namespace pspec {

/// (h_1, ..., h_n) acting by x_i -> h_i x_i. Every h_i is non-zero.
class TorusElement {
 public:
  /// Throws DomainError for a zero entry.
  explicit TorusElement(std::vector<Coeff> h);
  static TorusElement identity(std::size_t n);

  std::size_t size() const noexcept { return h_.size(); }
  const Coeff& operator[](std::size_t i) const { return h_[i]; }
  std::span<const Coeff> values() const noexcept { return h_; }
  Coeff product() const;

  /// Componentwise product.
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

 private:
  std::vector<Coeff> h_;
};

/// f(h_1 x_1, ..., h_n x_n).
Poly act(const TorusElement& h, const Poly& f);

/// c with a = c b, when such a scalar exists. Requires b non-zero.
std::optional<Coeff> proportionality(const Poly& a, const Poly& b);

struct WeightReport {
  /// h.s_i = sigma_i s_i and h.t_i = tau_i t_i, when semi-invariant.
  std::vector<std::optional<Coeff>> sigma;
  std::vector<std::optional<Coeff>> tau;
  /// Every s_i and t_i is semi-invariant.
  bool in_hprime = false;
  /// sigma_1 tau_1 ... sigma_{n-2} tau_{n-2}; present when in_hprime.
  std::optional<Coeff> rho;
  Coeff product;
  /// rho = h_1 ... h_n; present when in_hprime.
  std::optional<bool> rho_criterion;
};

WeightReport weight_report(const PoissonStructure& s, const TorusElement& h);

/// h.{x_i, x_j} = h_i h_j {x_i, x_j} for all i < j.
bool poisson_auto_check(const PoissonStructure& s, const TorusElement& h);

/// Every maximal minor E_ij is semi-invariant of weight h_i h_j.
bool h_group_check(const PoissonStructure& s, const TorusElement& h);

/// Whether x_i -> images[i] is a Poisson automorphism (theta{a,b} =
/// {theta a, theta b}) or, with `anti`, an anti-automorphism (theta{a,b} =
/// {theta b, theta a}), checked on generator pairs.
bool is_poisson_morphism(const PoissonStructure& s, std::span<const Poly> images, bool anti = false);

}  // namespace pspec
