#include "pspec/structure.hpp"

#include "pspec/error.hpp"

namespace pspec {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

void check_vars(const PoissonStructure& s, const Poly& p) {
  if (p.nvars() != s.nvars()) {
    throw ArityError("polynomial over " + std::to_string(p.nvars()) + " variables, structure has " +
                     std::to_string(s.nvars()));
  }
}

}  // namespace

std::vector<Poly> scaled_gradient(const Poly& s, const Poly& t) {
  std::vector<Poly> row;
  row.reserve(s.nvars());
  for (std::size_t j = 0; j < s.nvars(); ++j) {
    row.push_back(t * derivative(s, j) - s * derivative(t, j));
  }
  return row;
}

void PoissonStructure::fill_names(std::vector<std::string> names) {
  if (names.empty()) names = default_names(nvars_);
  if (names.size() != nvars_) throw ArityError("expected one name per variable");
  names_ = std::move(names);
}

PoissonStructure PoissonStructure::build(std::size_t nvars, std::vector<GeneratorPair> pairs,
                                         std::vector<std::string> names) {
  if (nvars < 3) throw DomainError("a structure needs at least 3 variables");
  if (pairs.size() != nvars - 2) {
    throw DomainError("expected " + std::to_string(nvars - 2) + " pairs for " + std::to_string(nvars) +
                      " variables, got " + std::to_string(pairs.size()));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [s, t] = pairs[i];
    if (s.nvars() != nvars || t.nvars() != nvars) throw ArityError("pair over the wrong variable count");
    const std::string which = "pair " + std::to_string(i + 1) + ": ";
    if (t.is_zero()) throw DomainError(which + "t is zero");
    if (!gcd(s, t).is_one()) throw DomainError(which + "s and t not coprime");
  }

  PoissonStructure ps;
  ps.nvars_ = nvars;
  ps.pairs_ = std::move(pairs);
  ps.fill_names(std::move(names));
  ps.validated_ = true;

  std::vector<std::vector<Poly>> rows;
  rows.reserve(ps.pairs_.size());
  for (const auto& [s, t] : ps.pairs_) rows.push_back(scaled_gradient(s, t));
  ps.e_ = PolyMatrix::from_rows(std::move(rows));

  ps.table_.assign(nvars * nvars, Poly(nvars));
  for (std::size_t i = 0; i < nvars; ++i) {
    for (std::size_t j = i + 1; j < nvars; ++j) {
      // (-1)^(i+j-1) in 1-based indices is (-1)^(i+j+1) in 0-based ones.
      Poly entry = minor_without_columns(ps.e_, i, j);
      if ((i + j) % 2 == 0) entry = -entry;
      ps.table_[j * nvars + i] = -entry;
      ps.table_[i * nvars + j] = std::move(entry);
    }
  }
  return ps;
}

PoissonStructure PoissonStructure::from_table(std::size_t nvars, std::vector<Poly> upper_entries,
                                              std::vector<std::string> names) {
  if (upper_entries.size() != nvars * (nvars - 1) / 2) {
    throw ArityError("raw table needs n(n-1)/2 entries");
  }
  PoissonStructure ps;
  ps.nvars_ = nvars;
  ps.fill_names(std::move(names));
  ps.table_.assign(nvars * nvars, Poly(nvars));
  std::size_t k = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    for (std::size_t j = i + 1; j < nvars; ++j) {
      Poly& e = upper_entries[k++];
      if (e.nvars() != nvars) throw ArityError("raw table entry over the wrong variable count");
      ps.table_[j * nvars + i] = -e;
      ps.table_[i * nvars + j] = std::move(e);
    }
  }
  return ps;
}

const Poly& PoissonStructure::generator_bracket(std::size_t i, std::size_t j) const {
  if (i >= nvars_ || j >= nvars_) throw RangeError("generator index out of range");
  return table_[i * nvars_ + j];
}

std::vector<RatFunc> PoissonStructure::rational_functions() const {
  std::vector<RatFunc> fs;
  fs.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) fs.emplace_back(s, t);
  return fs;
}

Poly bracket(const PoissonStructure& s, const Poly& f, const Poly& g) {
  check_vars(s, f);
  check_vars(s, g);
  const std::size_t n = s.nvars();
  Poly result(n);
  if (f.is_constant() || g.is_constant()) return result;
  const auto df = gradient(f);
  const auto dg = gradient(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly& xij = s.generator_bracket(i, j);
      if (xij.is_zero()) continue;
      Poly c = df[i] * dg[j] - df[j] * dg[i];
      if (!c.is_zero()) result += c * xij;
    }
  }
  return result;
}

Poly bracket_by_determinant(const PoissonStructure& s, const Poly& f, const Poly& g) {
  check_vars(s, f);
  check_vars(s, g);
  if (!s.validated()) throw DomainError("determinant form needs a structure built from pairs");
  std::vector<std::vector<Poly>> rows;
  rows.reserve(s.nvars());
  rows.push_back(gradient(f));
  rows.push_back(gradient(g));
  for (std::size_t r = 0; r < s.e_matrix().rows(); ++r) rows.push_back(s.e_matrix().row(r));
  return determinant(PolyMatrix::from_rows(std::move(rows)));
}

RatFunc bracket(const PoissonStructure& s, const RatFunc& f, const RatFunc& g) {
  check_vars(s, f.num());
  check_vars(s, g.num());
  const std::size_t n = s.nvars();
  if (f.is_polynomial() && g.is_polynomial()) return RatFunc(bracket(s, f.num(), g.num()));
  // With F = p/q and G = r/u: {F, G} = sum_{i<j} (d_i F d_j G - d_j F d_i G) {x_i, x_j}
  // and d_i F = (q d_i p - p d_i q) / q^2, so everything shares the denominator q^2 u^2.
  std::vector<Poly> df, dg;
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(f.den() * derivative(f.num(), i) - f.num() * derivative(f.den(), i));
    dg.push_back(g.den() * derivative(g.num(), i) - g.num() * derivative(g.den(), i));
  }
  Poly num(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly& xij = s.generator_bracket(i, j);
      if (xij.is_zero()) continue;
      Poly c = df[i] * dg[j] - df[j] * dg[i];
      if (!c.is_zero()) num += c * xij;
    }
  }
  const Poly q2 = f.den() * f.den();
  const Poly u2 = g.den() * g.den();
  return RatFunc(std::move(num), q2 * u2);
}

Poly jacobiator(const PoissonStructure& s, const Poly& f, const Poly& g, const Poly& h) {
  return bracket(s, f, bracket(s, g, h)) + bracket(s, g, bracket(s, h, f)) + bracket(s, h, bracket(s, f, g));
}

Poly plucker_relation(const PolyMatrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (!(i < j && j < k && k < l)) throw RangeError("plucker: indices must be strictly increasing");
  if (l >= m.cols()) throw RangeError("plucker: column index out of range");
  auto mn = [&](std::size_t a, std::size_t b) { return minor_without_columns(m, a, b); };
  return mn(i, j) * mn(k, l) - mn(i, k) * mn(j, l) + mn(j, k) * mn(i, l);
}

std::size_t jacobian_rank(std::span<const RatFunc> fs) {
  if (fs.empty()) return 0;
  std::vector<std::vector<Poly>> rows;
  rows.reserve(fs.size());
  for (const auto& f : fs) rows.push_back(scaled_gradient(f.num(), f.den()));
  return rank(PolyMatrix::from_rows(std::move(rows)));
}

}  // namespace pspec
