#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pspec/coeff.hpp"
#include "pspec/groebner.hpp"
#include "pspec/poly.hpp"
#include "pspec/ratfunc.hpp"
#include "pspec/structure.hpp"

namespace pspec {

/// {g, x_j} lies in I for every generator g of I and every variable x_j.
bool is_poisson_ideal(const PoissonStructure& s, const Ideal& ideal);

/// Every generator bracket {x_i, x_j} lies in I, so the bracket induced on
/// A/I is zero.
bool is_residually_null(const PoissonStructure& s, const Ideal& ideal);

struct GammaEntry {
  bool gamma;  // 0 iff s_i lies in P
  bool delta;  // 0 iff t_i lies in P

  friend bool operator==(const GammaEntry&, const GammaEntry&) = default;
};

struct GammaData {
  std::vector<GammaEntry> entries;
  /// No entry equals (0,0).
  bool dense = false;
  /// s_i with gamma_i = 1 and t_i with delta_i = 1, in the order s_1, t_1, s_2, ...
  std::vector<Poly> s_gamma;
  /// v_i = s_i/t_i when delta_i = 1, t_i/s_i otherwise. Filled only when dense.
  std::vector<RatFunc> v_gamma;
};

/// Membership pattern of the s_i and t_i in a proper ideal P. Throws
/// DomainError when P is the unit ideal.
GammaData gamma_of(const PoissonStructure& s, const Ideal& p);

struct PencilSpec {
  std::vector<Coeff> lambdas;
  std::vector<Coeff> mus;
};

/// lambda_i s_i - mu_i t_i for each i. Throws DomainError on (0,0) parameters
/// and ArityError on length mismatches.
std::vector<Poly> pencil_generators(const PoissonStructure& s, const PencilSpec& spec);
Ideal pencil_ideal(const PoissonStructure& s, const PencilSpec& spec);

struct ClassificationReport {
  /// First i with s_i(p) = t_i(p) = 0.
  std::optional<std::size_t> condition1;
  /// g_i = t_i(p) s_i - s_i(p) t_i are algebraically dependent. Evaluated only
  /// when condition 1 fails.
  bool condition2 = false;
  /// p is a singular point of the g_i: rank of their Jacobian at p below n-2.
  /// Evaluated only when conditions 1 and 2 fail.
  std::optional<bool> condition3;
  std::optional<std::size_t> jacobian_rank_at_point;
  std::vector<Poly> g;
  /// All {x_k, x_l}(p) vanish.
  bool direct_verdict = false;
  /// First (k, l) with {x_k, x_l}(p) != 0.
  std::optional<std::pair<std::size_t, std::size_t>> nonvanishing;
  bool final = false;
};

/// Decides whether the maximal ideal of p is Poisson, by the three-condition
/// criterion and independently by evaluating the bracket table at p.
ClassificationReport classify_point(const PoissonStructure& s, std::span<const Coeff> point);

struct CandidateReport {
  bool poisson = false;
  bool residually_null = false;
  bool proper = false;
};

struct PrimitiveReport {
  std::vector<Poly> pencil;
  bool pencil_poisson = false;
  bool pencil_residually_null = false;
  /// A residually null pencil ideal has only residually null primes over it,
  /// none of which is Poisson primitive.
  bool not_primitive = false;
  std::optional<CandidateReport> candidate;
};

/// Checks the certificate conditions for a primitive-ideal candidate over the
/// pencil ideal of `spec`. Primality and minimality of the candidate are not
/// decided. Throws DomainError when the pencil ideal is the unit ideal or the
/// candidate does not contain it.
PrimitiveReport analyze_primitive_candidate(const PoissonStructure& s, const PencilSpec& spec,
                                            const std::optional<Ideal>& candidate = std::nullopt);

/// For t_i = 1 and independent s_i: the fiber s_i = mu_i is nonsingular, i.e.
/// (s_i - mu_i) plus the maximal minors of Jac(s) generate the unit ideal.
/// Throws DomainError when a t_i is not 1 or the s_i are dependent.
bool smoothness_check(const PoissonStructure& s, std::span<const Coeff> mus);

}  // namespace pspec
