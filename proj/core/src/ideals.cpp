#include "pspec/ideals.hpp"

#include "pspec/error.hpp"
#include "pspec/matrix.hpp"

namespace pspec {
namespace {

void check_ideal(const PoissonStructure& s, const Ideal& ideal) {
  if (ideal.nvars() != s.nvars()) throw ArityError("ideal and structure have different variable counts");
}

void require_pairs(const PoissonStructure& s, const char* what) {
  if (!s.validated()) throw DomainError(std::string(what) + " needs a structure built from pairs");
}

}  // namespace

bool is_poisson_ideal(const PoissonStructure& s, const Ideal& ideal) {
  check_ideal(s, ideal);
  const std::size_t n = s.nvars();
  for (const auto& g : ideal.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!ideal.contains(bracket(s, g, Poly::variable(n, j)))) return false;
    }
  }
  return true;
}

bool is_residually_null(const PoissonStructure& s, const Ideal& ideal) {
  check_ideal(s, ideal);
  for (std::size_t i = 0; i < s.nvars(); ++i) {
    for (std::size_t j = i + 1; j < s.nvars(); ++j) {
      if (!ideal.contains(s.generator_bracket(i, j))) return false;
    }
  }
  return true;
}

GammaData gamma_of(const PoissonStructure& s, const Ideal& p) {
  check_ideal(s, p);
  require_pairs(s, "gamma");
  if (!p.is_proper()) throw DomainError("gamma: the ideal is not proper");
  GammaData out;
  out.dense = true;
  for (const auto& [si, ti] : s.pairs()) {
    const GammaEntry e{!p.contains(si), !p.contains(ti)};
    if (e.gamma) out.s_gamma.push_back(si);
    if (e.delta) out.s_gamma.push_back(ti);
    if (!e.gamma && !e.delta) out.dense = false;
    out.entries.push_back(e);
  }
  if (out.dense) {
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
      const auto& [si, ti] = s.pairs()[i];
      out.v_gamma.push_back(out.entries[i].delta ? RatFunc(si, ti) : RatFunc(ti, si));
    }
  }
  return out;
}

std::vector<Poly> pencil_generators(const PoissonStructure& s, const PencilSpec& spec) {
  require_pairs(s, "pencil");
  const std::size_t k = s.pairs().size();
  if (spec.lambdas.size() != k || spec.mus.size() != k) {
    throw ArityError("pencil: expected " + std::to_string(k) + " lambda and mu values");
  }
  std::vector<Poly> gens;
  gens.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (spec.lambdas[i] == 0 && spec.mus[i] == 0) {
      throw DomainError("pencil: (lambda, mu) = (0,0) at index " + std::to_string(i + 1));
    }
    const auto& [si, ti] = s.pairs()[i];
    gens.push_back(spec.lambdas[i] * si - spec.mus[i] * ti);
  }
  return gens;
}

Ideal pencil_ideal(const PoissonStructure& s, const PencilSpec& spec) {
  return Ideal(s.nvars(), pencil_generators(s, spec));
}

ClassificationReport classify_point(const PoissonStructure& s, std::span<const Coeff> point) {
  require_pairs(s, "classify-point");
  const std::size_t n = s.nvars();
  if (point.size() != n) {
    throw ArityError("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(n));
  }
  ClassificationReport r;

  for (std::size_t k = 0; k < n && !r.nonvanishing; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (evaluate(s.generator_bracket(k, l), point) != 0) {
        r.nonvanishing = {k, l};
        break;
      }
    }
  }
  r.direct_verdict = !r.nonvanishing.has_value();

  const auto pairs = s.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Coeff sp = evaluate(pairs[i].s, point);
    const Coeff tp = evaluate(pairs[i].t, point);
    if (sp == 0 && tp == 0 && !r.condition1) r.condition1 = i;
    r.g.push_back(tp * pairs[i].s - sp * pairs[i].t);
  }
  if (r.condition1) {
    r.final = true;
    return r;
  }

  std::vector<RatFunc> gs(r.g.begin(), r.g.end());
  r.condition2 = jacobian_rank(gs) < pairs.size();
  if (r.condition2) {
    r.final = true;
    return r;
  }

  std::vector<std::vector<Coeff>> jac;
  for (const auto& g : r.g) {
    std::vector<Coeff> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(evaluate(derivative(g, j), point));
    jac.push_back(std::move(row));
  }
  r.jacobian_rank_at_point = rank(std::move(jac));
  r.condition3 = *r.jacobian_rank_at_point < pairs.size();
  r.final = *r.condition3;
  return r;
}

PrimitiveReport analyze_primitive_candidate(const PoissonStructure& s, const PencilSpec& spec,
                                            const std::optional<Ideal>& candidate) {
  PrimitiveReport r;
  r.pencil = pencil_generators(s, spec);
  const Ideal pencil(s.nvars(), r.pencil);
  if (!pencil.is_proper()) throw DomainError("primitive: the pencil ideal is improper");
  r.pencil_poisson = is_poisson_ideal(s, pencil);
  r.pencil_residually_null = is_residually_null(s, pencil);
  r.not_primitive = r.pencil_residually_null;
  if (candidate) {
    check_ideal(s, *candidate);
    if (!candidate->contains(pencil)) throw DomainError("primitive: the candidate does not contain the pencil ideal");
    CandidateReport c;
    c.poisson = is_poisson_ideal(s, *candidate);
    c.residually_null = is_residually_null(s, *candidate);
    c.proper = candidate->is_proper();
    r.candidate = c;
  }
  return r;
}

bool smoothness_check(const PoissonStructure& s, std::span<const Coeff> mus) {
  require_pairs(s, "smooth");
  const auto pairs = s.pairs();
  if (mus.size() != pairs.size()) throw ArityError("smooth: expected " + std::to_string(pairs.size()) + " mu values");
  std::vector<std::vector<Poly>> rows;
  std::vector<RatFunc> fs;
  for (const auto& [si, ti] : pairs) {
    if (!ti.is_one()) throw DomainError("smooth: every t_i must be 1");
    rows.push_back(gradient(si));
    fs.emplace_back(si);
  }
  if (jacobian_rank(fs) < pairs.size()) throw DomainError("smooth: the s_i are algebraically dependent");
  const std::size_t n = s.nvars();
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < pairs.size(); ++i) gens.push_back(pairs[i].s - Poly::constant(n, mus[i]));
  for (auto& m : maximal_minors(PolyMatrix::from_rows(std::move(rows)))) {
    if (!m.is_zero()) gens.push_back(std::move(m));
  }
  return !Ideal(n, std::move(gens)).is_proper();
}

}  // namespace pspec
