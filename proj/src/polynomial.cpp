#include "pdalg/polynomial.hpp"

#include <algorithm>

#include "pdalg/errors.hpp"

namespace pdalg {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw DomainError("coordinate index out of range");
  Monomial m;
  m.exps_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

int Monomial::max_var() const {
  for (int i = static_cast<int>(kMaxVars) - 1; i >= 0; --i)
    if (exps_[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint16_t>(o.exps_[i] - exps_[i]);
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::with(std::size_t i, unsigned e) const {
  Monomial r = *this;
  r.degree_ = r.degree_ - r.exps_[i] + e;
  r.exps_[i] = static_cast<std::uint16_t>(e);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grlex_compare(a.first, b.first) > 0;
}

}  // namespace

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::var(std::size_t index) { return monomial(Monomial::var(index)); }

Polynomial Polynomial::monomial(const Monomial& m, const GaussianRational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

GaussianRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return GaussianRational(0);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int Polynomial::max_var() const {
  int v = -1;
  for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
  return v;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grlex_compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, Subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      GaussianRational s = Subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].first).scaled(b.terms_[0].second);
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return Polynomial::from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r = *this;  // multiplying by a monomial preserves the order
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (d.is_one()) return *this;
  const auto& [dm, dc] = d.terms_.front();
  if (d.terms_.size() == 1) {
    Polynomial q;
    GaussianRational inv = dc.inverse();
    for (const auto& [m, c] : terms_) {
      if (!dm.divides(m)) throw DomainError("inexact polynomial division");
      q.terms_.emplace_back(dm.quotient_of(m), c * inv);
    }
    return q;
  }
  GaussianRational inv = dc.inverse();
  std::vector<Term> quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.terms_.front();
    if (!dm.divides(rm)) throw DomainError("inexact polynomial division");
    Monomial qm = dm.quotient_of(rm);
    GaussianRational qc = rc * inv;
    rem -= d.times_monomial(qm).scaled(qc);
    quotient.emplace_back(qm, std::move(qc));
  }
  // quotient terms were produced in descending order
  Polynomial q;
  q.terms_ = std::move(quotient);
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || terms_.front().second.is_one()) return *this;
  return scaled(terms_.front().second.inverse());
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m[var];
    if (e == 0) continue;
    out.emplace_back(m.with(var, e - 1), c * GaussianRational(static_cast<long>(e)));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::conjugated(const std::vector<std::size_t>& perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (m[i] != 0) r = r * Monomial::var(perm[i], m[i]);
    out.emplace_back(r, c.conj());
  }
  return from_terms(std::move(out));
}

bool Polynomial::has_real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_real(); });
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& [m, c] : terms_) buckets[m[var]].emplace_back(m.with(var, 0), c);
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [m, c] : terms_) {
    h = h * 31 + m.hash();
    h = h * 31 + std::hash<std::string>{}(c.re().get_str() + "," + c.im().get_str());
  }
  return h;
}

// ---------------------------------------------------------------------- gcd

namespace {

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// gcd of all coefficients of p viewed as a polynomial in `var`.
Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
  return p.coefficients_in(var).back();
}

// Lazy pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lb = leading_coeff_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    unsigned da = a.degree_in(var);
    Polynomial la = leading_coeff_in(a, var);
    a = lb * a - (la * b).times_monomial(Monomial::var(var, da - db));
  }
  return a;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  return p.divide_exact(content_in(p, var)).monic();
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    Monomial g = a.terms().front().first;
    for (const auto& [m, c] : a.terms()) g = Monomial::gcd(g, m);
    for (const auto& [m, c] : b.terms()) g = Monomial::gcd(g, m);
    return Polynomial::monomial(g);
  }
  const std::size_t var = static_cast<std::size_t>(std::max(a.max_var(), b.max_var()));
  if (a.degree_in(var) == 0) return gcd_rec(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd_rec(content_in(a, var), b);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd_rec(ca, cb);
  Polynomial pa = a.divide_exact(ca);
  Polynomial pb = b.divide_exact(cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    Polynomial r = pseudo_rem(pa, pb, var);
    if (r.is_zero()) {
      g = primitive_part(pb, var);
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return (c * g).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_rec(a, b); }

}  // namespace pdalg
