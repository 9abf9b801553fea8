// Buchberger's algorithm over Q with fraction-free integer arithmetic. Every
// polynomial inside the engine is kept primitive (integer coefficients with
// content 1); only the final reduced basis is converted back to monic rational
// polynomials.

#include "pspec/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "pspec/error.hpp"

namespace pspec {
namespace {

struct ITerm {
  Monomial m;
  Integer c;
};

// Terms sorted in descending order for the order in use.
using IntPoly = std::vector<ITerm>;

IntPoly to_int(const Poly& p, const MonomialOrder& order, Integer* denominator = nullptr) {
  Integer den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back({t.monomial, std::move(c)});
  }
  if (!order.is_elimination() && order.kind() == OrderKind::grevlex) {
    // Poly is already stored in descending grevlex order.
  } else {
    std::sort(out.begin(), out.end(), [&](const ITerm& a, const ITerm& b) { return order.greater(a.m, b.m); });
  }
  if (denominator) *denominator = den;
  return out;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

Poly to_monic_poly(const IntPoly& p, std::size_t nvars) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  const Integer& lc = p.front().c;
  for (const auto& t : p) {
    Coeff c(t.c, lc);
    c.canonicalize();
    terms.push_back({t.m, std::move(c)});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

// a * f[from..] - b * (q * g), both inputs sorted by `order`.
IntPoly combine(const IntPoly& f, std::size_t from, const Integer& a, const Monomial& q, const Integer& b,
                const IntPoly& g, std::size_t g_from, const MonomialOrder& order) {
  IntPoly out;
  out.reserve(f.size() - from + g.size() - g_from);
  std::size_t i = from, j = g_from;
  Monomial qm;
  bool have_qm = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_qm) {
      qm = g[j].m * q;
      have_qm = true;
    }
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == f.size()) {
      cmp = std::strong_ordering::less;
    } else if (j == g.size()) {
      cmp = std::strong_ordering::greater;
    } else {
      cmp = order.compare(f[i].m, qm);
    }
    if (cmp > 0) {
      out.push_back({f[i].m, a == 1 ? f[i].c : Integer(a * f[i].c)});
      ++i;
    } else if (cmp < 0) {
      out.push_back({std::move(qm), Integer(-b * g[j].c)});
      have_qm = false;
      ++j;
    } else {
      Integer c = a * f[i].c - b * g[j].c;
      if (c != 0) out.push_back({f[i].m, std::move(c)});
      have_qm = false;
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reduced {
  IntPoly rem;
  Integer scale;  // scale * f - rem lies in the ideal
};

// Division of f by `divisors` (all non-zero, sorted by `order`). With
// full == false only leading terms are reduced and the rest is copied as is.
Reduced reduce(IntPoly f, const std::vector<const IntPoly*>& divisors, const MonomialOrder& order, bool full) {
  Reduced out{{}, Integer(1)};
  std::size_t start = 0;
  while (start < f.size()) {
    const ITerm& lt = f[start];
    const IntPoly* div = nullptr;
    for (const IntPoly* g : divisors) {
      if (g->front().m.divides(lt.m)) {
        div = g;
        break;
      }
    }
    if (!div) {
      if (!full) {
        for (std::size_t k = start; k < f.size(); ++k) out.rem.push_back(std::move(f[k]));
        break;
      }
      out.rem.push_back(std::move(f[start]));
      ++start;
      continue;
    }
    const Integer& gl = div->front().c;
    Integer d;
    mpz_gcd(d.get_mpz_t(), gl.get_mpz_t(), lt.c.get_mpz_t());
    Integer a = gl / d;
    Integer b = lt.c / d;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    const Monomial q = lt.m / div->front().m;
    f = combine(f, start + 1, a, q, b, *div, 1, order);
    start = 0;
    if (a != 1) {
      for (auto& t : out.rem) t.c *= a;
      out.scale *= a;
    }
  }
  return out;
}

struct Element {
  IntPoly p;
  std::uint64_t sugar;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
  std::size_t seq;
};

class Buchberger {
 public:
  Buchberger(std::size_t nvars, const MonomialOrder& order, PairSelection selection)
      : nvars_(nvars), order_(order), selection_(selection) {}

  std::vector<Poly> run(std::span<const Poly> gens) {
    for (const auto& g : gens) {
      if (g.nvars() != nvars_) throw ArityError("groebner: generator over the wrong variable count");
      if (g.is_zero()) continue;
      IntPoly p = to_int(g, order_);
      make_primitive(p);
      if (p.front().m.is_one()) return {Poly::constant(nvars_, 1)};
      add(std::move(p), g.total_degree());
    }
    while (!pairs_.empty()) {
      const Pair pair = take_pair();
      const IntPoly& gi = basis_[pair.i].p;
      const IntPoly& gj = basis_[pair.j].p;
      if (gi.front().m.coprime(gj.front().m)) continue;
      if (chain_criterion(pair)) continue;
      IntPoly s = s_polynomial(gi, gj, pair.lcm);
      Reduced r = reduce(std::move(s), divisors(), order_, false);
      if (r.rem.empty()) continue;
      make_primitive(r.rem);
      if (r.rem.front().m.is_one()) return {Poly::constant(nvars_, 1)};
      add(std::move(r.rem), pair.sugar);
    }
    return finish();
  }

 private:
  std::vector<const IntPoly*> divisors() const {
    std::vector<const IntPoly*> out;
    out.reserve(basis_.size());
    for (const auto& e : basis_) out.push_back(&e.p);
    return out;
  }

  void add(IntPoly p, std::uint64_t sugar) {
    const std::size_t idx = basis_.size();
    basis_.push_back({std::move(p), sugar});
    const Monomial& lead = basis_[idx].p.front().m;
    for (std::size_t k = 0; k < idx; ++k) {
      const Monomial& other = basis_[k].p.front().m;
      Monomial l = lcm(other, lead);
      const std::uint64_t deg = l.total_degree();
      const std::uint64_t s = std::max(basis_[k].sugar + deg - other.total_degree(),
                                       basis_[idx].sugar + deg - lead.total_degree());
      pairs_.push_back({k, idx, std::move(l), s, seq_++});
      pending_.insert({k, idx});
    }
  }

  Pair take_pair() {
    auto best = pairs_.begin();
    for (auto it = std::next(best); it != pairs_.end(); ++it) {
      if (selection_ == PairSelection::fifo) break;
      if (it->sugar != best->sugar) {
        if (it->sugar < best->sugar) best = it;
        continue;
      }
      const auto c = order_.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && it->seq < best->seq)) best = it;
    }
    Pair p = std::move(*best);
    pairs_.erase(best);
    pending_.erase({p.i, p.j});
    return p;
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  // Skip (i, j) when some other lead divides lcm(i, j) and both pairs it forms
  // with i and j have already been treated.
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis_[k].p.front().m.divides(p.lcm)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  IntPoly s_polynomial(const IntPoly& f, const IntPoly& g, const Monomial& l) const {
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const Integer a = g.front().c / d;
    const Integer b = f.front().c / d;
    // a * (l / lm f) * f - b * (l / lm g) * g, leading terms cancel.
    IntPoly fs;
    fs.reserve(f.size() - 1);
    const Monomial qf = l / f.front().m;
    for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({f[k].m * qf, f[k].c});
    return combine(fs, 0, a, l / g.front().m, b, g, 1, order_);
  }

  std::vector<Poly> finish() {
    // Minimal basis: drop elements whose lead is divisible by another lead.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial& li = basis_[i].p.front().m;
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& lj = basis_[j].p.front().m;
        if (lj.divides(li) && (lj != li || j < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<IntPoly> minimal;
    minimal.reserve(keep.size());
    for (auto i : keep) minimal.push_back(basis_[i].p);

    // Inter-reduce tails.
    std::vector<IntPoly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const IntPoly*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(&minimal[j]);
      }
      IntPoly tail(minimal[i].begin() + 1, minimal[i].end());
      Reduced r = reduce(std::move(tail), others, order_, true);
      IntPoly g;
      g.reserve(r.rem.size() + 1);
      g.push_back({minimal[i].front().m, minimal[i].front().c * r.scale});
      for (auto& t : r.rem) g.push_back(std::move(t));
      reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const IntPoly& a, const IntPoly& b) { return order_.greater(a.front().m, b.front().m); });
    std::vector<Poly> out;
    out.reserve(reduced.size());
    for (const auto& g : reduced) out.push_back(to_monic_poly(g, nvars_));
    return out;
  }

  std::size_t nvars_;
  MonomialOrder order_;
  PairSelection selection_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t seq_ = 0;
};

Poly normal_form_int(const Poly& f, const std::vector<IntPoly>& divisors, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  std::vector<const IntPoly*> ptrs;
  ptrs.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (!d.empty()) ptrs.push_back(&d);
  }
  Integer den;
  IntPoly fi = to_int(f, order, &den);
  Reduced r = reduce(std::move(fi), ptrs, order, true);
  const Integer total = r.scale * den;
  std::vector<Term> terms;
  terms.reserve(r.rem.size());
  for (auto& t : r.rem) {
    Coeff c(t.c, total);
    c.canonicalize();
    terms.push_back({std::move(t.m), std::move(c)});
  }
  return Poly::from_terms(f.nvars(), std::move(terms));
}

}  // namespace

Poly normal_form(const Poly& f, std::span<const Poly> divisors, const MonomialOrder& order) {
  std::vector<IntPoly> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.nvars() != f.nvars()) throw ArityError("normal_form: variable-count mismatch");
    ds.push_back(to_int(d, order));
  }
  return normal_form_int(f, ds, order);
}

std::vector<Poly> groebner_basis(std::span<const Poly> gens, const MonomialOrder& order, PairSelection selection) {
  if (gens.empty()) return {};
  return Buchberger(gens.front().nvars(), order, selection).run(gens);
}

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Poly> basis;
  std::vector<IntPoly> int_basis;
};

Ideal::Ideal(std::size_t nvars, std::vector<Poly> gens, MonomialOrder order)
    : nvars_(nvars), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != nvars) throw ArityError("ideal generator over the wrong variable count");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  if (order_.is_elimination() && order_.block_mask().size() != nvars) {
    throw ArityError("elimination order does not match the variable count");
  }
}

const std::vector<Poly>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = groebner_basis(gens_, order_);
    for (const auto& g : cache_->basis) cache_->int_basis.push_back(to_int(g, order_));
  });
  return cache_->basis;
}

Poly Ideal::reduce(const Poly& f) const {
  if (f.nvars() != nvars_) throw ArityError("reduce: variable-count mismatch");
  basis();
  return normal_form_int(f, cache_->int_basis, order_);
}

bool Ideal::contains(const Poly& f) const { return f.is_zero() || reduce(f).is_zero(); }

bool Ideal::is_proper() const {
  const auto& gb = basis();
  return !(gb.size() == 1 && gb.front().is_constant());
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Poly& g) { return contains(g); });
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop) {
  const std::size_t n = ideal.nvars();
  std::vector<bool> mask(n, false);
  for (auto v : drop) {
    if (v >= n) throw RangeError("eliminate: variable index out of range");
    mask[v] = true;
  }
  if (std::all_of(mask.begin(), mask.end(), [](bool b) { return b; })) {
    throw DomainError("eliminate: cannot drop every variable");
  }
  const auto gb = groebner_basis(ideal.generators(), MonomialOrder::elimination(mask, ideal.order().kind()));
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t v = 0; v < n && free; ++v) free = !(mask[v] && g.involves(v));
    if (free) kept.push_back(g);
  }
  return Ideal(n, std::move(kept), MonomialOrder(ideal.order().kind()));
}

Ideal saturate(const Ideal& ideal, const Poly& f) {
  const std::size_t n = ideal.nvars();
  if (f.nvars() != n) throw ArityError("saturate: variable-count mismatch");
  if (f.is_zero()) throw DomainError("saturate: saturating by zero");
  if (f.is_constant()) return ideal;
  std::vector<Poly> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const auto& g : ideal.generators()) gens.push_back(with_nvars(g, n + 1));
  const Poly y = Poly::variable(n + 1, n);
  gens.push_back(Poly::constant(n + 1, 1) - y * with_nvars(f, n + 1));
  const std::size_t drop[] = {n};
  const Ideal lifted(n + 1, std::move(gens), MonomialOrder(ideal.order().kind()));
  const Ideal elim = eliminate(lifted, drop);
  std::vector<Poly> out;
  out.reserve(elim.generators().size());
  for (const auto& g : elim.generators()) out.push_back(with_nvars(g, n));
  return Ideal(n, std::move(out), ideal.order());
}

}  // namespace pspec
