#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pspec/matrix.hpp"
#include "pspec/poly.hpp"
#include "pspec/ratfunc.hpp"

namespace pspec {

/// One rational function s/t of the defining data. t is non-zero and coprime
/// to s.
struct GeneratorPair {
  Poly s;
  Poly t;
};

/// Jacobian Poisson bracket on Q[x1..xn] determined by n-2 rational functions
/// f_i = s_i/t_i:
///
///   {f, g} = (t_1 ... t_{n-2})^2 Jac(f, g, f_1, ..., f_{n-2}).
///
/// Row i of E is t_i grad(s_i) - s_i grad(t_i) = t_i^2 grad(f_i), and the
/// generator brackets are {x_i, x_j} = (-1)^(i+j-1) E_ij with E_ij the maximal
/// minor of E obtained by deleting columns i and j (1-based i, j).
///
/// All indices in this API are 0-based. The bracket table is computed eagerly,
/// so a built structure is immutable and safe to share between threads.
class PoissonStructure {
 public:
  /// Validates the data (n >= 3, n-2 pairs, t_i != 0, gcd(s_i, t_i) = 1) and
  /// computes E and the bracket table. Throws DomainError / ArityError.
  static PoissonStructure build(std::size_t nvars, std::vector<GeneratorPair> pairs,
                                std::vector<std::string> names = {});

  /// Structure given directly by its generator brackets {x_i, x_j}, i < j, in
  /// row-major order. No E matrix and no validation: the result need not
  /// satisfy the Jacobi identity. Intended for negative tests.
  static PoissonStructure from_table(std::size_t nvars, std::vector<Poly> upper_entries,
                                     std::vector<std::string> names = {});

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const GeneratorPair> pairs() const noexcept { return pairs_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool validated() const noexcept { return validated_; }

  /// The (n-2) x n matrix E. Empty for raw-table structures.
  const PolyMatrix& e_matrix() const noexcept { return e_; }

  /// {x_i, x_j}; antisymmetric, zero on the diagonal.
  const Poly& generator_bracket(std::size_t i, std::size_t j) const;

  /// f_i = s_i / t_i.
  std::vector<RatFunc> rational_functions() const;

 private:
  PoissonStructure() = default;
  void fill_names(std::vector<std::string> names);

  std::size_t nvars_ = 0;
  std::vector<GeneratorPair> pairs_;
  std::vector<std::string> names_;
  PolyMatrix e_;
  std::vector<Poly> table_;  // n x n, antisymmetric
  bool validated_ = false;
};

/// {f, g} by the biderivation expansion
/// sum_{i<j} (d_i f d_j g - d_j f d_i g) {x_i, x_j}.
Poly bracket(const PoissonStructure& s, const Poly& f, const Poly& g);

/// {f, g} as det J, with rows grad f, grad g and the rows of E. Independent of
/// the bracket table; used as a cross-check of bracket().
Poly bracket_by_determinant(const PoissonStructure& s, const Poly& f, const Poly& g);

/// Bracket extended to rational functions with the quotient rule.
RatFunc bracket(const PoissonStructure& s, const RatFunc& f, const RatFunc& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Poly jacobiator(const PoissonStructure& s, const Poly& f, const Poly& g, const Poly& h);

/// M_ij M_kl - M_ik M_jl + M_jk M_il for a k x (k+2) matrix, where M_ab is the
/// minor with columns a and b deleted. Requires i < j < k < l (0-based).
Poly plucker_relation(const PolyMatrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// Rank over Q(x1..xn) of the matrix with rows t^2 grad(s/t) = t grad s - s grad t.
/// The functions are algebraically dependent iff the rank is below their count.
std::size_t jacobian_rank(std::span<const RatFunc> fs);

/// Row t grad(s) - s grad(t).
std::vector<Poly> scaled_gradient(const Poly& s, const Poly& t);

}  // namespace pspec
