#include "pdalg/structure.hpp"

#include "pdalg/errors.hpp"

namespace pdalg {

bool Connection::is_zero() const {
  for (const auto& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

PoissonStructure::PoissonStructure(Chart chart, ExprMatrix P)
    : PoissonStructure(chart, std::move(P), Connection(chart.dim())) {}

PoissonStructure::PoissonStructure(Chart chart, ExprMatrix P, Connection gamma)
    : chart_(std::move(chart)), P_(std::move(P)), gamma_(std::move(gamma)) {
  const std::size_t n = chart_.dim();
  if (P_.rows() != n || P_.cols() != n) throw DomainError("P does not match the chart dimension");
  if (gamma_.dim() != n) throw DomainError("connection does not match the chart dimension");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (!(P_(a, b) == -P_(b, a))) throw DomainError("P is not antisymmetric");
  P_inv_ = P_.inverse();

  coord_dx_.resize(n * n);
  dx_dx_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      DiffForm q;
      for (std::size_t d = 0; d < n; ++d) {
        RatExpr coeff;
        for (std::size_t c = 0; c < n; ++c)
          if (!P_(a, c).is_zero() && !gamma_(b, c, d).is_zero()) coeff -= P_(a, c) * gamma_(b, c, d);
        q.add_term(static_cast<WedgeMask>(1u << d), coeff);
      }
      coord_dx_[a * n + b] = q;
    }
  // (dx^a, dx^b) = d (x^a, dx^b), from the Leibniz rule and d(dx) = 0.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) dx_dx_[a * n + b] = ext_d(coord_dx_[a * n + b], chart_);
}

const ExprMatrix& PoissonStructure::require_P_inverse() const {
  if (!P_inv_) throw DomainError("P is not invertible");
  return *P_inv_;
}

RatExpr PoissonStructure::bracket(const RatExpr& f, const RatExpr& g) const {
  const std::size_t n = dim();
  if (f.is_constant() || g.is_constant()) return RatExpr();
  std::vector<RatExpr> df(n), dg(n);
  for (std::size_t a = 0; a < n; ++a) {
    df[a] = f.diff(a);
    dg[a] = g.diff(a);
  }
  RatExpr out;
  for (std::size_t a = 0; a < n; ++a) {
    if (df[a].is_zero()) continue;
    RatExpr row;
    for (std::size_t b = 0; b < n; ++b)
      if (!dg[b].is_zero() && !P_(a, b).is_zero()) row += P_(a, b) * dg[b];
    out += df[a] * row;
  }
  return out;
}

DiffForm PoissonStructure::function_with_dx(const RatExpr& f, std::size_t b) const {
  DiffForm out;
  if (f.is_constant()) return out;
  for (std::size_t a = 0; a < dim(); ++a) {
    RatExpr da = f.diff(a);
    if (!da.is_zero()) out += coord_dx(a, b) * da;
  }
  return out;
}

// Bracket of two atoms: a function (index < 0, value *fa / *ga) or dx^index.
DiffForm PoissonStructure::atom_bracket(const RatExpr* fa, int fi, const RatExpr* ga, int gi) const {
  if (fi < 0 && gi < 0) return DiffForm(bracket(*fa, *ga));
  if (fi < 0) return function_with_dx(*fa, static_cast<std::size_t>(gi));
  if (gi < 0) return -function_with_dx(*ga, static_cast<std::size_t>(fi));
  return dx_dx(static_cast<std::size_t>(fi), static_cast<std::size_t>(gi));
}

namespace {

DiffForm word(const std::vector<std::size_t>& idx, std::size_t from, std::size_t to) {
  DiffForm w(1);
  for (std::size_t i = from; i < to; ++i) w = wedge(w, DiffForm::dx(idx[i]));
  return w;
}

}  // namespace

DiffForm PoissonStructure::bracket(const DiffForm& f, const DiffForm& g) const {
  require_fits(f, chart_);
  require_fits(g, chart_);
  DiffForm out;
  for (const auto& [mf, c] : f.terms()) {
    const std::vector<std::size_t> I = mask_indices(mf);
    const std::size_t k = I.size();
    for (const auto& [mg, e] : g.terms()) {
      const std::vector<std::size_t> J = mask_indices(mg);
      const std::size_t m = J.size();
      // Atom 0 of each term is its coefficient function; atoms 1.. are the dx factors.
      for (std::size_t b = 0; b <= m; ++b) {
        const std::size_t g_pre = b == 0 ? 0 : b - 1;
        const int gi = b == 0 ? -1 : static_cast<int>(J[b - 1]);
        DiffForm g_before = word(J, 0, g_pre);
        DiffForm g_after = word(J, b == 0 ? 0 : b, m);
        for (std::size_t a = 0; a <= k; ++a) {
          const int fi = a == 0 ? -1 : static_cast<int>(I[a - 1]);
          DiffForm value = atom_bracket(&c, fi, &e, gi);
          if (value.is_zero()) continue;
          const std::size_t f_post = a == 0 ? k : k - a;
          const unsigned sign_exp = static_cast<unsigned>((k % 2) * g_pre + (b == 0 ? 0 : 1) * f_post);
          RatExpr scalar(1);
          if (a != 0) scalar *= c;
          if (b != 0) scalar *= e;
          if (sign_exp % 2 == 1) scalar = -scalar;
          DiffForm f_before = word(I, 0, a == 0 ? 0 : a - 1);
          DiffForm f_after = word(I, a == 0 ? 0 : a, k);
          DiffForm piece = wedge({g_before, f_before, value, f_after, g_after});
          out += piece * scalar;
        }
      }
    }
  }
  return out;
}

PoissonStructure structure_from_brackets(const Chart& chart, const ExprMatrix& P,
                                         const std::vector<std::vector<DiffForm>>& coord_dx) {
  const std::size_t n = chart.dim();
  auto inv = P.inverse();
  if (!inv) throw DomainError("P is not invertible");
  Connection gamma(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) {
        RatExpr s;
        for (std::size_t a = 0; a < n; ++a) {
          RatExpr q = coord_dx.at(a).at(b).coefficient(static_cast<WedgeMask>(1u << d));
          if (!q.is_zero() && !(*inv)(c, a).is_zero()) s -= (*inv)(c, a) * q;
        }
        gamma(b, c, d) = s;
      }
  return PoissonStructure(chart, P, std::move(gamma));
}

}  // namespace pdalg
