#include "pspec/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <string>

#include "pspec/error.hpp"

namespace pspec {

// ---------------------------------------------------------------------------
// Coeff

std::string to_string(const Coeff& c) { return c.get_str(); }

Coeff parse_coeff(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

  const auto slash = trimmed.find('/');
  std::string_view num = trimmed.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational number '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Coeff c(n, d);
  c.canonicalize();
  return c;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw RangeError("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw DomainError("monomial not divisible");
    r.exps_[i] = exps_[i] - other.exps_[i];
  }
  return r;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t{exps_[i]} * k;
    if (e > std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

Monomial Monomial::without(std::size_t i) const {
  Monomial r = *this;
  r.exps_[i] = 0;
  return r;
}

Monomial Monomial::with_nvars(std::size_t nvars) const {
  Monomial r(nvars);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i < nvars) {
      r.exps_[i] = exps_[i];
    } else if (exps_[i] != 0) {
      throw ArityError("cannot drop a variable that occurs");
    }
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

// Compares a and b restricted to the variables with mask[i] == want (all
// variables when the mask is empty).
std::strong_ordering compare_restricted(const Monomial& a, const Monomial& b, OrderKind kind,
                                        const std::vector<bool>& mask, bool want) {
  const std::size_t n = a.nvars();
  auto used = [&](std::size_t i) { return mask.empty() || mask[i] == want; };
  if (kind != OrderKind::lex) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used(i)) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da <=> db;
  }
  if (kind == OrderKind::grevlex) {
    for (std::size_t i = n; i-- > 0;) {
      if (used(i) && a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (used(i) && a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::elimination(std::vector<bool> block, OrderKind inner) {
  MonomialOrder o(inner);
  o.block_ = std::move(block);
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t k, std::size_t nvars, OrderKind inner) {
  std::vector<bool> mask(nvars, false);
  for (std::size_t i = 0; i < k && i < nvars; ++i) mask[i] = true;
  return elimination(std::move(mask), inner);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (block_.empty()) return compare_restricted(a, b, kind_, block_, true);
  if (auto c = compare_restricted(a, b, kind_, block_, true); c != 0) return c;
  return compare_restricted(a, b, kind_, block_, false);
}

std::string MonomialOrder::name() const {
  std::string base = kind_ == OrderKind::lex ? "lex" : kind_ == OrderKind::grlex ? "grlex" : "grevlex";
  if (block_.empty()) return base;
  std::string vars;
  for (std::size_t i = 0; i < block_.size(); ++i) {
    if (block_[i]) vars += (vars.empty() ? "" : ",") + std::to_string(i + 1);
  }
  return "elim(" + vars + ";" + base + ")";
}

OrderKind parse_order_kind(std::string_view name) {
  if (name == "lex") return OrderKind::lex;
  if (name == "grlex") return OrderKind::grlex;
  if (name == "grevlex") return OrderKind::grevlex;
  throw DomainError("unknown monomial order '" + std::string(name) + "'");
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  static const std::vector<bool> none;
  return compare_restricted(a, b, OrderKind::grevlex, none, true) > 0;
}

// ---------------------------------------------------------------------------
// Degree guard

namespace {

std::uint64_t initial_degree_limit() {
  if (const char* env = std::getenv("PSPEC_MAX_DEGREE")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 64;
}

std::atomic<std::uint64_t>& degree_limit() {
  static std::atomic<std::uint64_t> limit{initial_degree_limit()};
  return limit;
}

void check_degree(std::uint64_t d) {
  if (d > max_total_degree()) {
    throw OverflowError("total degree " + std::to_string(d) + " exceeds limit " +
                        std::to_string(max_total_degree()) + " (PSPEC_MAX_DEGREE)");
  }
}

void check_arity(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) {
    throw ArityError("variable-count mismatch: " + std::to_string(a.nvars()) + " vs " +
                     std::to_string(b.nvars()));
  }
}

}  // namespace

std::uint64_t max_total_degree() { return degree_limit().load(std::memory_order_relaxed); }
void set_max_total_degree(std::uint64_t limit) { degree_limit().store(limit, std::memory_order_relaxed); }

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(std::size_t nvars, const Coeff& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Poly p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), Coeff(1)});
  return p;
}

Poly Poly::from_monomial(Monomial m, const Coeff& c) {
  Poly p(m.nvars());
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw ArityError("monomial length differs from variable count");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GrevlexGreater{}(a.monomial, b.monomial); });
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

bool Poly::is_one() const noexcept {
  return terms_.size() == 1 && terms_.front().monomial.is_one() && terms_.front().coeff == 1;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.greater(it->monomial, best->monomial)) best = it;
  }
  return *best;
}

std::uint64_t Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.total_degree();
}

Exponent Poly::degree_in(std::size_t var) const {
  if (var >= nvars_) throw RangeError("variable index out of range");
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

Coeff Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two sorted term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  GrevlexGreater greater;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || greater(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Coeff c = subtract ? Coeff(a[i].coeff - b[j].coeff) : Coeff(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  check_arity(*this, other);
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_arity(*this, other);
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_arity(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
  check_degree(a.total_degree() + b.total_degree());
  if (a.size() == 1) return b * a.terms_.front();
  if (b.size() == 1) return a * b.terms_.front();
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) raw.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Poly::from_terms(a.nvars(), std::move(raw));
}

Poly operator*(Poly a, const Term& t) {
  if (t.monomial.nvars() != a.nvars()) throw ArityError("variable-count mismatch");
  if (t.coeff == 0) return Poly(a.nvars());
  if (!a.is_zero()) check_degree(a.total_degree() + t.monomial.total_degree());
  // Multiplying by a monomial preserves any monomial order.
  for (auto& s : a.terms_) {
    s.monomial = s.monomial * t.monomial;
    s.coeff *= t.coeff;
  }
  return a;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Coeff inv = 1 / leading_coeff();
  return r *= inv;
}

Poly pow(const Poly& p, std::uint32_t k) {
  if (k == 0) return Poly::constant(p.nvars(), 1);
  if (p.is_zero()) return p;
  check_degree(p.total_degree() * k);
  if (p.size() == 1) {
    const auto& t = p.terms().front();
    Coeff c;
    mpz_pow_ui(c.get_num_mpz_t(), t.coeff.get_num_mpz_t(), k);
    mpz_pow_ui(c.get_den_mpz_t(), t.coeff.get_den_mpz_t(), k);
    return Poly::from_monomial(t.monomial.pow(k), c);
  }
  Poly result = Poly::constant(p.nvars(), 1);
  Poly base = p;
  while (true) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k == 0) break;
    base *= base;
  }
  return result;
}

Poly derivative(const Poly& p, std::size_t var) {
  if (var >= p.nvars()) throw RangeError("derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const Exponent e = t.monomial[var];
    if (e == 0) continue;
    std::vector<Exponent> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[var] = e - 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  // Lowering one exponent can reorder terms under grevlex, so re-sort.
  return Poly::from_terms(p.nvars(), std::move(out));
}

std::vector<Poly> gradient(const Poly& p) {
  std::vector<Poly> g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(derivative(p, i));
  return g;
}

Coeff evaluate(const Poly& p, std::span<const Coeff> point) {
  if (point.size() != p.nvars()) {
    throw ArityError("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(p.nvars()));
  }
  Coeff sum = 0;
  Coeff power;
  for (const auto& t : p.terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const Exponent e = t.monomial[i];
      if (e == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= power;
    }
    sum += v;
  }
  return sum;
}

Poly substitute(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.nvars()) throw ArityError("substitute: need one image per variable");
  if (images.empty()) return p;
  const std::size_t m = images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != m) throw ArityError("substitute: images over different variable counts");
  }
  Poly result(m);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(m, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.monomial[i] != 0) term *= pow(images[i], t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Poly with_nvars(const Poly& p, std::size_t nvars) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.monomial.with_nvars(nvars), t.coeff});
  return Poly::from_terms(nvars, std::move(out));
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  check_arity(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return Poly(a.nvars());
  const Term& lead = b.leading_term();
  if (b.size() == 1) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      out.push_back({t.monomial / lead.monomial, t.coeff / lead.coeff});
    }
    return Poly::from_terms(a.nvars(), std::move(out));
  }
  // When b | a every leading term of the running remainder is divisible by the
  // leading term of b; anything else proves non-divisibility.
  Poly rem = a;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Term q{t.monomial / lead.monomial, t.coeff / lead.coeff};
    rem -= b * q;
    quot.push_back(std::move(q));
  }
  return Poly::from_terms(a.nvars(), std::move(quot));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw DomainError("polynomial division is not exact");
  return std::move(*q);
}

}  // namespace pspec
