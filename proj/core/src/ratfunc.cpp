#include "pspec/ratfunc.hpp"

#include "pspec/error.hpp"

namespace pspec {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.nvars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (num.nvars() != den.nvars()) throw ArityError("rational function: variable-count mismatch");
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = Poly::constant(den.nvars(), 1);
    return;
  }
  const Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Coeff scale = 1 / den.leading_coeff();
  num_ = std::move(num) * scale;
  den_ = std::move(den) * scale;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc derivative(const RatFunc& f, std::size_t var) {
  if (f.is_polynomial()) return RatFunc(derivative(f.num(), var));
  return RatFunc(f.den() * derivative(f.num(), var) - f.num() * derivative(f.den(), var),
                 f.den() * f.den());
}

}  // namespace pspec
