#include "pdalg/geometry.hpp"

#include "pdalg/errors.hpp"

namespace pdalg {

namespace {

// Γ_w(a, d, b): the coefficient multiplying dx^d in the connection one-form (a, b).
const RatExpr& one_form_coeff(const Connection& g, ConnectionKind which, std::size_t a, std::size_t d,
                              std::size_t b) {
  return which == ConnectionKind::gamma ? g(a, d, b) : g(a, b, d);
}

void require_coordinate(const Tensor& U) {
  for (const auto& s : U.signature())
    if (s.basis != Basis::coordinate) throw DomainError("expected a coordinate-basis tensor");
}

// Contracts slot `s` of U with matrix m: out(.., i, ..) = Σ_j m(i, j) U(.., j, ..).
Tensor contract_slot(const Tensor& U, std::size_t s, const ExprMatrix& m, IndexSlot new_slot) {
  auto sig = U.signature();
  sig[s] = new_slot;
  Tensor out(U.dim(), sig);
  for_each_index(U.dim(), U.rank(), [&](const Tensor::Index& idx) {
    Tensor::Index src = idx;
    RatExpr acc;
    for (std::size_t j = 0; j < U.dim(); ++j) {
      if (m(idx[s], j).is_zero()) continue;
      src[s] = j;
      const RatExpr& u = U(src);
      if (!u.is_zero()) acc += m(idx[s], j) * u;
    }
    out(idx) = acc;
  });
  return out;
}

std::string index_label(const Tensor::Index& idx, const std::vector<IndexSlot>& sig, const Chart& chart) {
  std::string out = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ",";
    if (sig[k].basis == Basis::coordinate && idx[k] < chart.dim())
      out += chart.name(idx[k]);
    else
      out += std::to_string(idx[k]);
  }
  return out + "]";
}

}  // namespace

Connection transposed(const Connection& gamma) {
  const std::size_t n = gamma.dim();
  Connection out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out(a, b, c) = gamma(a, c, b);
  return out;
}

Tensor torsion(const Connection& gamma) {
  const std::size_t n = gamma.dim();
  Tensor t(n, {up(), down(), down()});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) t({a, b, c}) = gamma(a, b, c) - gamma(a, c, b);
  return t;
}

Tensor covariant_derivative(const Tensor& U, const Connection& gamma, ConnectionKind which) {
  require_coordinate(U);
  const std::size_t n = U.dim();
  if (gamma.dim() != n) throw DomainError("connection dimension mismatch");
  auto sig = U.signature();
  sig.push_back(down());
  Tensor out(n, sig);
  const std::size_t r = U.rank();
  for_each_index(n, r, [&](const Tensor::Index& idx) {
    Tensor::Index src = idx;
    for (std::size_t d = 0; d < n; ++d) {
      RatExpr acc = U(idx).diff(d);
      for (std::size_t s = 0; s < r; ++s) {
        const bool is_up = U.signature()[s].variance == Variance::up;
        for (std::size_t m = 0; m < n; ++m) {
          src[s] = m;
          const RatExpr& u = U(src);
          if (u.is_zero()) continue;
          if (is_up) {
            const RatExpr& g = one_form_coeff(gamma, which, idx[s], d, m);
            if (!g.is_zero()) acc += g * u;
          } else {
            const RatExpr& g = one_form_coeff(gamma, which, m, d, idx[s]);
            if (!g.is_zero()) acc -= g * u;
          }
        }
        src[s] = idx[s];
      }
      Tensor::Index o = idx;
      o.push_back(d);
      out(o) = acc;
    }
  });
  return out;
}

Tensor curvature(const Connection& gamma, ConnectionKind which) {
  const std::size_t n = gamma.dim();
  Tensor R(n, {up(), down(), down(), down()});
  auto G = [&](std::size_t a, std::size_t d, std::size_t b) -> const RatExpr& {
    return one_form_coeff(gamma, which, a, d, b);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          RatExpr v = G(a, d, b).diff(c) - G(a, c, b).diff(d);
          for (std::size_t k = 0; k < n; ++k) {
            v += G(a, c, k) * G(k, d, b);
            v -= G(a, d, k) * G(k, c, b);
          }
          R({a, b, c, d}) = v;
          R({a, b, d, c}) = -v;
        }
  return R;
}

Tensor poisson_tensor(const PoissonStructure& s) { return matrix_tensor(s.P(), up(), up()); }

CheckEntry check_block_diagonal(const PoissonStructure& s) {
  const Chart& chart = s.chart();
  Check check("integrability.block-diagonal", chart);
  if (!chart.is_complex()) {
    check.not_applicable("real chart");
    return check.finish();
  }
  const std::size_t n = s.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t al = 0; al < n; ++al)
      for (std::size_t b = 0; b < n; ++b) {
        if (chart.is_holomorphic(a) == chart.is_holomorphic(b)) continue;
        check.expect_zero(s.gamma(a, al, b),
                          "Gamma[" + chart.name(a) + "," + chart.name(al) + "," + chart.name(b) + "]");
      }
  return check.finish();
}

VerificationReport check_integrability(const PoissonStructure& s) {
  const Chart& chart = s.chart();
  const std::size_t n = s.dim();
  VerificationReport report;

  Check jp("integrability.jacobi-P", chart);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        RatExpr v;
        const std::size_t t[3] = {a, b, c};
        for (int k = 0; k < 3; ++k) {
          const std::size_t x = t[k], y = t[(k + 1) % 3], z = t[(k + 2) % 3];
          for (std::size_t d = 0; d < n; ++d)
            if (!s.P(x, d).is_zero()) v += s.P(x, d) * s.P(y, z).diff(d);
        }
        jp.expect_zero(v, "[" + chart.name(a) + "," + chart.name(b) + "," + chart.name(c) + "]");
      }
  report.add(jp.finish());

  Check curv("integrability.curvature", chart);
  Check ntp("integrability.nabla-tilde-P", chart);
  Check npr("integrability.nabla-PR", chart);
  if (!s.P_inverse()) {
    for (Check* c : {&curv, &ntp, &npr}) c->not_applicable("P is not invertible");
  } else {
    expect_zero_tensor(curv, curvature(s.gamma()), "R", chart);
    expect_zero_tensor(ntp, covariant_derivative(poisson_tensor(s), s.gamma(), ConnectionKind::gamma_tilde),
                       "nabla~P", chart);
    const Tensor Rt = curvature(s.gamma(), ConnectionKind::gamma_tilde);
    Tensor W(n, {up(), up(), down(), down()});
    for_each_index(n, 4, [&](const Tensor::Index& i) {
      RatExpr v;
      for (std::size_t c = 0; c < n; ++c)
        if (!s.P(i[0], c).is_zero()) v += s.P(i[0], c) * Rt({i[1], c, i[2], i[3]});
      W(i) = v;
    });
    expect_zero_tensor(npr, covariant_derivative(W, s.gamma()), "nabla(P Rt)", chart);
  }
  report.add(curv.finish());
  report.add(ntp.finish());
  report.add(npr.finish());
  if (chart.is_complex()) report.add(check_block_diagonal(s));
  return report;
}

Connection connection_from_metric(const Metric& h, const ExprMatrix& P) {
  const std::size_t n = P.rows();
  if (h.dim() != n) throw DomainError("metric dimension mismatch");
  auto Pinv = P.inverse();
  if (!Pinv) throw DomainError("P is singular");
  const ExprMatrix& hl = h.lower();
  const ExprMatrix& hu = h.upper();
  // X^{ade} = the bracketed sum with free indices (a, d, e).
  std::vector<RatExpr> X(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t e = 0; e < n; ++e) {
        RatExpr v;
        for (std::size_t k = 0; k < n; ++k) {
          v += hu(e, k) * P(a, d).diff(k);
          v += hu(a, k) * P(d, e).diff(k);
          v -= hu(d, k) * P(e, a).diff(k);
          v += P(e, k) * hu(a, d).diff(k);
          v -= P(a, k) * hu(d, e).diff(k);
          v -= P(d, k) * hu(e, a).diff(k);
        }
        X[(a * n + d) * n + e] = v;
      }
  const RatExpr half = RatExpr(GaussianRational(Rational(1, 2)));
  Connection out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        RatExpr v;
        for (std::size_t d = 0; d < n; ++d) {
          if ((*Pinv)(b, d).is_zero()) continue;
          for (std::size_t e = 0; e < n; ++e) {
            const RatExpr& x = X[(a * n + d) * n + e];
            if (x.is_zero() || hl(c, e).is_zero()) continue;
            v += (*Pinv)(b, d) * hl(c, e) * x;
          }
        }
        out(a, b, c) = half * v;
      }
  return out;
}

Tensor first_identity_residual(const Connection& gamma) {
  const std::size_t n = gamma.dim();
  const Tensor R = curvature(gamma);
  const Tensor T = torsion(gamma);
  const Tensor DT = covariant_derivative(T, gamma);  // DT(a,c,d,b) = ∇_b T^a_{cd}
  auto term = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    RatExpr v = R({a, b, c, d}) - DT({a, c, d, b});
    for (std::size_t k = 0; k < n; ++k) v += T({a, b, k}) * T({k, c, d});
    return v;
  };
  Tensor out(n, {up(), down(), down(), down()});
  for_each_index(n, 4, [&](const Tensor::Index& i) {
    out(i) = term(i[0], i[1], i[2], i[3]) + term(i[0], i[2], i[3], i[1]) + term(i[0], i[3], i[1], i[2]);
  });
  return out;
}

Tensor second_identity_residual(const Connection& gamma) {
  const std::size_t n = gamma.dim();
  const Tensor R = curvature(gamma);
  const Tensor Rt = curvature(gamma, ConnectionKind::gamma_tilde);
  const Tensor T = torsion(gamma);
  const Tensor DT = covariant_derivative(T, gamma);
  auto TT = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    RatExpr v;
    for (std::size_t k = 0; k < n; ++k) v += T({a, b, k}) * T({k, c, d});
    return v;
  };
  Tensor out(n, {up(), down(), down(), down()});
  for_each_index(n, 4, [&](const Tensor::Index& i) {
    const std::size_t a = i[0], b = i[1], c = i[2], d = i[3];
    out(i) = Rt(i) - R(i) + DT({a, d, b, c}) + DT({a, b, c, d}) - TT(a, b, c, d) - TT(a, c, d, b) - TT(a, d, b, c);
  });
  return out;
}

void validate(const CoordinateChange& c, std::size_t dim) {
  for (std::size_t a = 0; a < dim; ++a) {
    RatExpr g = c.new_of_old.count(a) ? c.new_of_old.at(a) : RatExpr::var(a);
    RatExpr f = c.old_of_new.count(a) ? c.old_of_new.at(a) : RatExpr::var(a);
    if (!(g.subst(c.old_of_new) == RatExpr::var(a)) || !(f.subst(c.new_of_old) == RatExpr::var(a)))
      throw DomainError("coordinate maps are not mutually inverse");
  }
}

namespace {

RatExpr component(const std::map<std::size_t, RatExpr>& map, std::size_t a) {
  auto it = map.find(a);
  return it == map.end() ? RatExpr::var(a) : it->second;
}

// J(a', a) = ∂x'^{a'}/∂x^a at x = F(x'); K(b, b') = ∂x^b/∂x'^{b'}.
std::pair<ExprMatrix, ExprMatrix> jacobians(const CoordinateChange& c, std::size_t n) {
  ExprMatrix J(n, n), K(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const RatExpr g = component(c.new_of_old, a);
    const RatExpr f = component(c.old_of_new, a);
    for (std::size_t b = 0; b < n; ++b) {
      J(a, b) = g.diff(b).subst(c.old_of_new);
      K(a, b) = f.diff(b);
    }
  }
  return {J, K};
}

}  // namespace

Tensor transform_tensor(const Tensor& U, const CoordinateChange& c) {
  require_coordinate(U);
  const std::size_t n = U.dim();
  auto [J, K] = jacobians(c, n);
  const ExprMatrix Kt = K.transpose();
  Tensor cur(n, U.signature());
  for (std::size_t k = 0; k < U.size(); ++k) cur.flat_at(k) = U.flat_at(k).subst(c.old_of_new);
  for (std::size_t s = 0; s < U.rank(); ++s)
    cur = contract_slot(cur, s, U.signature()[s].variance == Variance::up ? J : Kt, U.signature()[s]);
  return cur;
}

Connection transform_connection(const Connection& gamma, const CoordinateChange& c) {
  const std::size_t n = gamma.dim();
  auto [J, K] = jacobians(c, n);
  // Inner(a', k, l) = J(a', d) Γ^d_{kl}(F) - ∂²G^{a'}/∂x^k∂x^l (F).
  std::vector<RatExpr> inner(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const RatExpr g = component(c.new_of_old, a);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        RatExpr v = -g.diff(k).diff(l).subst(c.old_of_new);
        for (std::size_t d = 0; d < n; ++d)
          if (!gamma(d, k, l).is_zero()) v += J(a, d) * gamma(d, k, l).subst(c.old_of_new);
        inner[(a * n + k) * n + l] = v;
      }
  }
  Connection out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        RatExpr v;
        for (std::size_t k = 0; k < n; ++k) {
          if (K(k, b).is_zero()) continue;
          for (std::size_t l = 0; l < n; ++l)
            if (!K(l, cc).is_zero()) v += K(k, b) * K(l, cc) * inner[(a * n + k) * n + l];
        }
        out(a, b, cc) = v;
      }
  return out;
}

PoissonStructure transform_structure(const PoissonStructure& s, const CoordinateChange& c) {
  const Tensor P = transform_tensor(poisson_tensor(s), c);
  const std::size_t n = s.dim();
  ExprMatrix Pm(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) Pm(a, b) = P({a, b});
  return PoissonStructure(s.chart(), Pm, transform_connection(s.gamma(), c));
}

Tensor to_frame(const Tensor& U, const ExprMatrix& M, const ExprMatrix& Minv) {
  const ExprMatrix Mt = M.transpose();
  Tensor cur = U;
  for (std::size_t s = 0; s < U.rank(); ++s) {
    const IndexSlot slot = U.signature()[s];
    if (slot.basis == Basis::frame) continue;
    cur = contract_slot(cur, s, slot.variance == Variance::up ? Minv : Mt, IndexSlot{slot.variance, Basis::frame});
  }
  return cur;
}

void expect_zero_tensor(Check& check, const Tensor& residual, const std::string& label, const Chart& chart) {
  for (std::size_t k = 0; k < residual.size(); ++k)
    check.expect_zero(residual.flat_at(k), label + index_label(residual.index_of(k), residual.signature(), chart));
}

}  // namespace pdalg
