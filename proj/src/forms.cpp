#include "pdalg/forms.hpp"

#include <algorithm>

#include "pdalg/errors.hpp"

namespace pdalg {

std::vector<std::size_t> mask_indices(WedgeMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m = static_cast<WedgeMask>(m >> 1u))
    if (m & 1u) out.push_back(i);
  return out;
}

WedgeMask mask_of(const std::vector<std::size_t>& idx) {
  WedgeMask m = 0;
  for (auto i : idx) m = static_cast<WedgeMask>(m | (1u << i));
  return m;
}

bool WedgeOrder::operator()(WedgeMask a, WedgeMask b) const {
  unsigned da = mask_degree(a), db = mask_degree(b);
  if (da != db) return da < db;
  // Equal degree: lexicographic on the increasing index lists, i.e. decided
  // by the lowest index present in exactly one of them.
  WedgeMask diff = static_cast<WedgeMask>(a ^ b);
  if (diff == 0) return false;
  WedgeMask low = static_cast<WedgeMask>(diff & (~diff + 1u));
  return (a & low) != 0;
}

namespace {

// Sign of wedge(dx^a, dx^b) relative to dx^{a|b}; zero when they overlap.
int merge_sign(WedgeMask a, WedgeMask b) {
  if ((a & b) != 0) return 0;
  unsigned swaps = 0;
  for (WedgeMask rest = b; rest != 0; rest = static_cast<WedgeMask>(rest & (rest - 1u))) {
    WedgeMask bit = static_cast<WedgeMask>(rest & (~rest + 1u));
    // elements of a greater than this element of b must move past it
    swaps += mask_degree(static_cast<WedgeMask>(a & ~(bit | (bit - 1u))));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace

DiffForm::DiffForm(const RatExpr& f) {
  if (!f.is_zero()) terms_.emplace(0, f);
}

DiffForm DiffForm::dx(std::size_t index) {
  if (index >= kMaxVars) throw DomainError("one-form index out of range");
  return term(static_cast<WedgeMask>(1u << index), RatExpr(1));
}

DiffForm DiffForm::term(WedgeMask m, const RatExpr& c) {
  DiffForm f;
  f.add_term(m, c);
  return f;
}

void DiffForm::add_term(WedgeMask m, const RatExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatExpr DiffForm::coefficient(WedgeMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatExpr() : it->second;
}

RatExpr DiffForm::as_function() const {
  if (terms_.empty()) return RatExpr();
  if (terms_.size() != 1 || terms_.begin()->first != 0) throw DomainError("form is not a function");
  return terms_.begin()->second;
}

int DiffForm::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw DomainError("inhomogeneous form has no degree");
  return static_cast<int>(mask_degree(terms_.begin()->first));
}

bool DiffForm::is_homogeneous() const {
  if (terms_.empty()) return true;
  return mask_degree(terms_.begin()->first) == mask_degree(terms_.rbegin()->first);
}

DiffForm DiffForm::component(unsigned k) const {
  DiffForm out;
  for (const auto& [m, c] : terms_)
    if (mask_degree(m) == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::map<unsigned, DiffForm> DiffForm::homogeneous_parts() const {
  std::map<unsigned, DiffForm> out;
  for (const auto& [m, c] : terms_) out[mask_degree(m)].terms_.emplace_hint(out[mask_degree(m)].terms_.end(), m, c);
  return out;
}

int DiffForm::max_index() const {
  int mx = -1;
  for (const auto& [m, c] : terms_) {
    for (int i = static_cast<int>(kMaxVars) - 1; i >= 0; --i)
      if (m & (1u << i)) {
        mx = std::max(mx, i);
        break;
      }
    mx = std::max({mx, c.numerator().max_var(), c.denominator().max_var()});
  }
  return mx;
}

bool DiffForm::has_polynomial_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

DiffForm DiffForm::operator-() const {
  DiffForm out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffForm& DiffForm::operator*=(const RatExpr& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  DiffForm out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      RatExpr c = ca * cb;
      out.add_term(static_cast<WedgeMask>(ma | mb), s > 0 ? c : -c);
    }
  return out;
}

DiffForm wedge(std::initializer_list<DiffForm> factors) {
  DiffForm acc(1);
  for (const auto& f : factors) acc = wedge(acc, f);
  return acc;
}

DiffForm ext_d(const DiffForm& f, const Chart& chart, DerivativeMode mode) {
  if (mode != DerivativeMode::full && !chart.is_complex())
    throw DomainError("holomorphic/antiholomorphic derivative needs a complex chart");
  require_fits(f, chart);
  DiffForm out;
  for (std::size_t beta = 0; beta < chart.dim(); ++beta) {
    if (mode == DerivativeMode::holo && !chart.is_holomorphic(beta)) continue;
    if (mode == DerivativeMode::antiholo && chart.is_holomorphic(beta)) continue;
    const WedgeMask bit = static_cast<WedgeMask>(1u << beta);
    for (const auto& [m, c] : f.terms()) {
      int s = merge_sign(bit, m);
      if (s == 0) continue;
      RatExpr dc = c.diff(beta);
      if (dc.is_zero()) continue;
      out.add_term(static_cast<WedgeMask>(m | bit), s > 0 ? dc : -dc);
    }
  }
  return out;
}

DiffForm star(const DiffForm& f, const Chart& chart) {
  if (!chart.is_complex()) throw DomainError("the *-operation needs a complex chart");
  require_fits(f, chart);
  DiffForm out;
  for (const auto& [m, c] : f.terms()) {
    // (θ1 ... θk)* = θk* ... θ1*; sort the reversed conjugate list and count transpositions.
    std::vector<std::size_t> idx = mask_indices(m);
    std::vector<std::size_t> rev;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) rev.push_back(chart.conj(*it));
    unsigned swaps = 0;
    for (std::size_t i = 0; i < rev.size(); ++i)
      for (std::size_t j = i + 1; j < rev.size(); ++j)
        if (rev[i] > rev[j]) ++swaps;
    RatExpr cc = c.conjugated(chart.conj_permutation());
    std::sort(rev.begin(), rev.end());
    out.add_term(mask_of(rev), swaps % 2 == 0 ? cc : -cc);
  }
  return out;
}

std::pair<unsigned, unsigned> bidegree(WedgeMask m, const Chart& chart) {
  unsigned h = 0, a = 0;
  for (auto i : mask_indices(m)) (chart.is_holomorphic(i) ? h : a)++;
  return {h, a};
}

void require_fits(const DiffForm& f, const Chart& chart) {
  if (f.max_index() >= static_cast<int>(chart.dim())) throw DomainError("form does not belong to the chart");
}

}  // namespace pdalg
