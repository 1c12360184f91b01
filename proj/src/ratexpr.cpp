#include "pdalg/ratexpr.hpp"

#include "pdalg/errors.hpp"

namespace pdalg {

namespace {

// Brings num/den to normal form, assuming nothing about common factors.
void normalize(Polynomial& num, Polynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den = Polynomial(1);
    return;
  }
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = num.divide_exact(g);
      den = den.divide_exact(g);
    }
  }
  const GaussianRational& lc = den.leading_term().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

}  // namespace

RatExpr::RatExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize(num_, den_);
}

GaussianRational RatExpr::constant_value() const {
  if (!is_constant()) throw DomainError("expression is not constant");
  return num_.constant_term();
}

RatExpr RatExpr::operator-() const {
  RatExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RatExpr& RatExpr::operator+=(const RatExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize(num_, den_);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;  // gcd(num + q*den, den) = gcd(num, den) = 1
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial d1 = den_.divide_exact(g);
  Polynomial d2 = o.den_.divide_exact(g);
  Polynomial num = num_ * d2 + o.num_ * d1;
  Polynomial den = den_ * d2;
  normalize(num, den);
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& o) { return *this += -o; }

RatExpr& RatExpr::operator*=(const RatExpr& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatExpr();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial num = num_.divide_exact(g1) * o.num_.divide_exact(g2);
  Polynomial den = den_.divide_exact(g2) * o.den_.divide_exact(g1);
  const GaussianRational lc = den.leading_term().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatExpr& RatExpr::operator/=(const RatExpr& o) { return *this *= o.inverse(); }

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw DomainError("division by zero expression");
  RatExpr r;
  r.num_ = den_;
  r.den_ = num_;
  const GaussianRational lc = r.den_.leading_term().second;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatExpr RatExpr::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatExpr r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));  // coprime powers of coprime polynomials
  return r;
}

RatExpr RatExpr::diff(std::size_t var) const {
  if (den_.is_one()) return RatExpr(num_.derivative(var));
  Polynomial dd = den_.derivative(var);
  if (dd.is_zero()) {
    RatExpr r;
    r.num_ = num_.derivative(var);
    r.den_ = den_;
    normalize(r.num_, r.den_);
    return r;
  }
  return RatExpr(num_.derivative(var) * den_ - num_ * dd, den_ * den_);
}

namespace {

RatExpr eval_poly(const Polynomial& p, const std::map<std::size_t, RatExpr>& map) {
  // Cache powers of each substituted variable.
  std::map<std::pair<std::size_t, unsigned>, RatExpr> powers;
  auto power = [&](std::size_t v, unsigned e) -> const RatExpr& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, map.at(v).pow(e)).first;
    return it->second;
  };
  RatExpr acc;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    RatExpr factor(c);
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      unsigned e = m[v];
      if (e == 0) continue;
      if (map.count(v) != 0) {
        factor *= power(v, e);
      } else {
        kept = kept * Monomial::var(v, e);
      }
    }
    acc += factor * RatExpr(Polynomial::monomial(kept));
  }
  return acc;
}

}  // namespace

RatExpr RatExpr::subst(const std::map<std::size_t, RatExpr>& map) const {
  RatExpr num = eval_poly(num_, map);
  RatExpr den = eval_poly(den_, map);
  if (den.is_zero()) throw DomainError("substitution makes a denominator vanish identically");
  return num / den;
}

RatExpr RatExpr::conjugated(const std::vector<std::size_t>& perm) const {
  RatExpr r;
  r.num_ = num_.conjugated(perm);
  r.den_ = den_.conjugated(perm);
  normalize(r.num_, r.den_);
  return r;
}

std::size_t RatExpr::hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

}  // namespace pdalg
