// Multivariate gcd by recursive content / primitive-part reduction. A
// polynomial is viewed as univariate in its highest occurring variable with
// coefficients in the ring of the remaining ones; primitive parts are combined
// with the subresultant polynomial remainder sequence.

#include <algorithm>
#include <vector>

#include "pspec/error.hpp"
#include "pspec/poly.hpp"

namespace pspec {
namespace {

using UniPoly = std::vector<Poly>;  // index = degree in the main variable

UniPoly coefficients_in(const Poly& p, std::size_t var) {
  UniPoly cs(p.degree_in(var) + 1, Poly(p.nvars()));
  std::vector<std::vector<Term>> buckets(cs.size());
  for (const auto& t : p.terms()) {
    buckets[t.monomial[var]].push_back({t.monomial.without(var), t.coeff});
  }
  for (std::size_t d = 0; d < cs.size(); ++d) cs[d] = Poly::from_terms(p.nvars(), std::move(buckets[d]));
  return cs;
}

Poly from_coefficients(const UniPoly& cs, std::size_t var, std::size_t nvars) {
  Poly p(nvars);
  for (std::size_t d = 0; d < cs.size(); ++d) {
    if (!cs[d].is_zero()) p += cs[d] * Term{Monomial::variable(nvars, var, static_cast<Exponent>(d)), 1};
  }
  return p;
}

void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::size_t degree(const UniPoly& p) { return p.size() - 1; }

// lc(B)^(deg A - deg B + 1) * A mod B, computed in R[x] without division.
UniPoly pseudo_remainder(UniPoly a, const UniPoly& b) {
  const Poly& lcb = b.back();
  std::size_t steps = degree(a) - degree(b) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    const Poly lca = a.back();
    const std::size_t shift = degree(a) - degree(b);
    for (auto& c : a) c = lcb * c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lca * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0 && !a.empty()) {
    const Poly scale = pow(lcb, static_cast<std::uint32_t>(steps));
    for (auto& c : a) c = scale * c;
  }
  return a;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const UniPoly& cs) {
  Poly g(cs.back().nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

UniPoly divide_coefficients(UniPoly p, const Poly& d) {
  for (auto& c : p) c = exact_quotient(c, d);
  return p;
}

// Primitive gcd of two primitive polynomials in R[x] (subresultant PRS).
UniPoly subresultant_gcd(UniPoly a, UniPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t nv = a.back().nvars();
  Poly g = Poly::constant(nv, 1);
  Poly h = Poly::constant(nv, 1);
  while (true) {
    const std::size_t delta = degree(a) - degree(b);
    UniPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return UniPoly{Poly::constant(nv, 1)};
    a = std::move(b);
    b = divide_coefficients(std::move(r), g * pow(h, static_cast<std::uint32_t>(delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(pow(g, static_cast<std::uint32_t>(delta)),
                         pow(h, static_cast<std::uint32_t>(delta - 1)));
    }
  }
  return divide_coefficients(b, content_in(b));
}

std::size_t main_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.involves(v) || b.involves(v)) return v;
  }
  return 0;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), 1);

  const std::size_t v = main_variable(a, b);
  const UniPoly ca = coefficients_in(a, v);
  const UniPoly cb = coefficients_in(b, v);
  if (ca.size() == 1) return gcd_impl(a, content_in(cb));
  if (cb.size() == 1) return gcd_impl(content_in(ca), b);

  const Poly cont_a = content_in(ca);
  const Poly cont_b = content_in(cb);
  const Poly cont = gcd_impl(cont_a, cont_b);
  const UniPoly prim = subresultant_gcd(divide_coefficients(ca, cont_a), divide_coefficients(cb, cont_b));
  return cont * from_coefficients(prim, v, a.nvars());
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw ArityError("gcd: variable-count mismatch");
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  return gcd_impl(a, b).monic();
}

}  // namespace pspec
