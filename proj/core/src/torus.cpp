#include "pspec/torus.hpp"

#include <algorithm>

#include "pspec/error.hpp"
#include "pspec/matrix.hpp"

namespace pspec {
namespace {

void check_size(const PoissonStructure& s, const TorusElement& h) {
  if (h.size() != s.nvars()) {
    throw ArityError("torus element has " + std::to_string(h.size()) + " entries, expected " +
                     std::to_string(s.nvars()));
  }
}

bool semi_invariant(const TorusElement& h, const Poly& f, const Coeff& weight) {
  return act(h, f) == weight * f;
}

}  // namespace

TorusElement::TorusElement(std::vector<Coeff> h) : h_(std::move(h)) {
  if (std::any_of(h_.begin(), h_.end(), [](const Coeff& c) { return c == 0; })) {
    throw DomainError("torus element entries must be non-zero");
  }
}

TorusElement TorusElement::identity(std::size_t n) { return TorusElement(std::vector<Coeff>(n, Coeff(1))); }

Coeff TorusElement::product() const {
  Coeff p = 1;
  for (const auto& c : h_) p *= c;
  return p;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  if (a.size() != b.size()) throw ArityError("torus elements of different sizes");
  std::vector<Coeff> h(a.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = a[i] * b[i];
  return TorusElement(std::move(h));
}

Poly act(const TorusElement& h, const Poly& f) {
  if (h.size() != f.nvars()) throw ArityError("torus element and polynomial have different variable counts");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Coeff c = t.coeff;
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (Exponent e = 0; e < t.monomial[i]; ++e) c *= h[i];
    }
    terms.push_back({t.monomial, std::move(c)});
  }
  return Poly::from_terms(f.nvars(), std::move(terms));
}

std::optional<Coeff> proportionality(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("proportionality: zero reference polynomial");
  if (a.is_zero()) return Coeff(0);
  if (a.size() != b.size()) return std::nullopt;
  const Coeff c = a.terms()[0].coeff / b.terms()[0].coeff;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.terms()[k].monomial != b.terms()[k].monomial) return std::nullopt;
    if (a.terms()[k].coeff != c * b.terms()[k].coeff) return std::nullopt;
  }
  return c;
}

WeightReport weight_report(const PoissonStructure& s, const TorusElement& h) {
  check_size(s, h);
  if (!s.validated()) throw DomainError("weights need a structure built from pairs");
  WeightReport r;
  r.product = h.product();
  r.in_hprime = true;
  for (const auto& [si, ti] : s.pairs()) {
    r.sigma.push_back(si.is_zero() ? std::optional<Coeff>() : proportionality(act(h, si), si));
    r.tau.push_back(proportionality(act(h, ti), ti));
    if (!r.sigma.back() || !r.tau.back()) r.in_hprime = false;
  }
  if (r.in_hprime) {
    Coeff rho = 1;
    for (std::size_t i = 0; i < r.sigma.size(); ++i) rho *= *r.sigma[i] * *r.tau[i];
    r.rho = rho;
    r.rho_criterion = rho == r.product;
  }
  return r;
}

bool poisson_auto_check(const PoissonStructure& s, const TorusElement& h) {
  check_size(s, h);
  for (std::size_t i = 0; i < s.nvars(); ++i) {
    for (std::size_t j = i + 1; j < s.nvars(); ++j) {
      if (!semi_invariant(h, s.generator_bracket(i, j), h[i] * h[j])) return false;
    }
  }
  return true;
}

bool h_group_check(const PoissonStructure& s, const TorusElement& h) {
  check_size(s, h);
  if (!s.validated()) throw DomainError("the group H needs a structure built from pairs");
  for (std::size_t i = 0; i < s.nvars(); ++i) {
    for (std::size_t j = i + 1; j < s.nvars(); ++j) {
      if (!semi_invariant(h, minor_without_columns(s.e_matrix(), i, j), h[i] * h[j])) return false;
    }
  }
  return true;
}

bool is_poisson_morphism(const PoissonStructure& s, std::span<const Poly> images, bool anti) {
  const std::size_t n = s.nvars();
  if (images.size() != n) throw ArityError("expected one image per variable");
  for (const auto& p : images) {
    if (p.nvars() != n) throw ArityError("image over the wrong variable count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly lhs = substitute(s.generator_bracket(i, j), images);
      const Poly rhs = anti ? bracket(s, images[j], images[i]) : bracket(s, images[i], images[j]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace pspec
