#include "pdalg/canonical.hpp"

#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"
#include "pdalg/geometry.hpp"

namespace pdalg {

namespace {

using GR = GaussianRational;

const GR kHalf{Rational(1, 2)};

std::string idx_label(std::initializer_list<std::size_t> idx) {
  std::string out = "[";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

bool all_zero(const std::vector<GR>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

CanonicalConstants::CanonicalConstants(std::size_t dim)
    : dim_(dim), Rt_(dim * dim * dim * dim), f_(dim * dim * dim), g_(dim * dim) {}

bool CanonicalConstants::Rt_is_zero() const { return all_zero(Rt_); }
bool CanonicalConstants::f_is_zero() const { return all_zero(f_); }

void CanonicalConstants::set_Rt(std::size_t a, std::size_t b, std::size_t c, std::size_t d, const GR& v) {
  Rt(a, b, c, d) = v;
  Rt(a, b, d, c) = v;
  Rt(b, a, c, d) = -v;
  Rt(b, a, d, c) = -v;
}

void CanonicalConstants::set_f(std::size_t a, std::size_t b, std::size_t c, const GR& v) {
  f(a, b, c) = v;
  f(b, a, c) = -v;
}

void CanonicalConstants::set_g(std::size_t a, std::size_t b, const GR& v) {
  g(a, b) = v;
  g(b, a) = -v;
}

CanonicalTransform CanonicalTransform::identity(std::size_t dim) {
  return {ScalarMatrix::identity(dim), std::vector<GR>(dim)};
}

CanonicalTransform CanonicalTransform::translation(std::vector<GR> V) {
  const std::size_t n = V.size();
  return {ScalarMatrix::identity(n), std::move(V)};
}

CanonicalTransform compose(const CanonicalTransform& t2, const CanonicalTransform& t1) {
  const std::size_t n = t1.V.size();
  if (t2.V.size() != n) throw DomainError("transform dimension mismatch");
  CanonicalTransform out{t2.N * t1.N, t2.V};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.V[a] += t2.N(a, b) * t1.V[b];
  return out;
}

std::vector<GR> cybe_defect(const CanonicalConstants& c) {
  const std::size_t n = c.dim();
  std::vector<GR> out(n * n * n * n * n * n);
  auto R = [&](std::size_t a, std::size_t b, std::size_t x, std::size_t y) -> const GR& { return c.Rt(a, b, x, y); };
  std::size_t k = 0;
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B)
      for (std::size_t C = 0; C < n; ++C)
        for (std::size_t D = 0; D < n; ++D)
          for (std::size_t E = 0; E < n; ++E)
            for (std::size_t F = 0; F < n; ++F, ++k) {
              GR v;
              for (std::size_t X = 0; X < n; ++X) {
                v += R(A, B, X, E) * R(X, C, D, F) - R(A, C, X, F) * R(X, B, D, E);  // [R12,R13]
                v += R(A, B, D, X) * R(X, C, E, F) - R(B, C, X, F) * R(A, X, D, E);  // [R12,R23]
                v += R(A, C, D, X) * R(B, X, E, F) - R(B, C, E, X) * R(A, X, D, F);  // [R13,R23]
              }
              out[k] = v;
            }
  return out;
}

VerificationReport check_constants(const CanonicalConstants& c) {
  const std::size_t n = c.dim();
  const Chart chart = canonical_chart(n);
  VerificationReport report;

  Check sr("constants.symmetry-Rt", chart);
  Check sf("constants.symmetry-f", chart);
  Check sg("constants.symmetry-g", chart);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      sg.expect_zero(RatExpr(c.g(a, b) + c.g(b, a)), idx_label({a, b}));
      for (std::size_t x = 0; x < n; ++x) {
        sf.expect_zero(RatExpr(c.f(a, b, x) + c.f(b, a, x)), idx_label({a, b, x}));
        for (std::size_t y = 0; y < n; ++y) {
          sr.expect_zero(RatExpr(c.Rt(a, b, x, y) + c.Rt(b, a, x, y)), idx_label({a, b, x, y}) + " upper");
          sr.expect_zero(RatExpr(c.Rt(a, b, x, y) - c.Rt(a, b, y, x)), idx_label({a, b, x, y}) + " lower");
        }
      }
    }
  report.add(sr.finish());
  report.add(sf.finish());
  report.add(sg.finish());

  // Only the contraction with Φ^D Φ^E Φ^F enters the Jacobi identity, so the
  // defect is checked symmetrized over (D,E,F).
  Check cy("constants.cybe", chart);
  const auto defect = cybe_defect(c);
  auto at = [&](std::size_t A, std::size_t B, std::size_t C, std::size_t D, std::size_t E, std::size_t F) {
    return defect[((((A * n + B) * n + C) * n + D) * n + E) * n + F];
  };
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B)
      for (std::size_t C = 0; C < n; ++C)
        for (std::size_t D = 0; D < n; ++D)
          for (std::size_t E = D; E < n; ++E)
            for (std::size_t F = E; F < n; ++F) {
              const GR v = at(A, B, C, D, E, F) + at(A, B, C, D, F, E) + at(A, B, C, E, D, F) +
                           at(A, B, C, E, F, D) + at(A, B, C, F, D, E) + at(A, B, C, F, E, D);
              cy.expect_zero(RatExpr(v), idx_label({A, B, C, D, E, F}));
            }
  report.add(cy.finish());

  // Cyclic sums over (A,B,C).
  auto cyclic = [](std::size_t A, std::size_t B, std::size_t C, auto&& term) {
    return term(A, B, C) + term(B, C, A) + term(C, A, B);
  };
  Check quad("constants.quadratic", chart);
  Check lin("constants.linear", chart);
  Check cst("constants.constant", chart);
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B)
      for (std::size_t C = 0; C < n; ++C) {
        cst.expect_zero(RatExpr(cyclic(A, B, C,
                                       [&](std::size_t a, std::size_t b, std::size_t cc) {
                                         GR v;
                                         for (std::size_t d = 0; d < n; ++d) v += c.f(a, b, d) * c.g(cc, d);
                                         return v;
                                       })),
                        idx_label({A, B, C}));
        for (std::size_t D = 0; D < n; ++D) {
          lin.expect_zero(RatExpr(cyclic(A, B, C,
                                         [&](std::size_t a, std::size_t b, std::size_t cc) {
                                           GR v;
                                           for (std::size_t e = 0; e < n; ++e)
                                             v += c.Rt(a, b, e, D) * c.g(cc, e) + c.f(a, b, e) * c.f(cc, e, D);
                                           return v;
                                         })),
                          idx_label({A, B, C, D}));
          for (std::size_t E = D; E < n; ++E) {
            auto term = [&](std::size_t d, std::size_t e) {
              return cyclic(A, B, C, [&](std::size_t a, std::size_t b, std::size_t cc) {
                GR v;
                for (std::size_t f = 0; f < n; ++f)
                  v += GR(2) * c.Rt(a, b, f, d) * c.f(cc, f, e) + c.f(a, b, f) * c.Rt(cc, f, d, e);
                return v;
              });
            };
            quad.expect_zero(RatExpr(term(D, E) + term(E, D)), idx_label({A, B, C, D, E}));
          }
        }
      }
  report.add(quad.finish());
  report.add(lin.finish());
  report.add(cst.finish());
  return report;
}

Chart canonical_chart(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim; ++a) names.push_back("phi" + std::to_string(a));
  return Chart::real(names);
}

ExprMatrix canonical_P(const CanonicalConstants& c) {
  const std::size_t n = c.dim();
  ExprMatrix P(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      RatExpr v(c.g(a, b));
      for (std::size_t x = 0; x < n; ++x) {
        if (!c.f(a, b, x).is_zero()) v += RatExpr(c.f(a, b, x)) * RatExpr::var(x);
        for (std::size_t y = 0; y < n; ++y)
          if (!c.Rt(a, b, x, y).is_zero())
            v += RatExpr(kHalf * c.Rt(a, b, x, y)) * RatExpr::var(x) * RatExpr::var(y);
      }
      P(a, b) = v;
    }
  return P;
}

PoissonStructure canonical_bracket_only(const CanonicalConstants& c, const Chart& chart) {
  if (chart.dim() != c.dim()) throw DomainError("chart dimension does not match the constants");
  return PoissonStructure(chart, canonical_P(c));
}

CanonicalBuild build_canonical(const CanonicalConstants& c, const Chart& chart, bool require_valid) {
  if (require_valid && !check_constants(c).passed()) throw DomainError("constants fail check_constants");
  const std::size_t n = c.dim();
  PoissonStructure bare = canonical_bracket_only(c, chart);
  if (!bare.P_inverse()) throw DomainError("P is singular");
  const ExprMatrix& P = bare.P();
  const ExprMatrix& Pinv = *bare.P_inverse();
  Connection gamma(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        RatExpr v;
        for (std::size_t d = 0; d < n; ++d)
          if (!P(a, d).is_zero()) v += P(a, d) * Pinv(d, cc).diff(b);
        gamma(a, b, cc) = v;
      }
  Frame fr;
  fr.M = P;
  fr.Minv = Pinv;
  for (std::size_t a = 0; a < n; ++a) fr.Phi.push_back(RatExpr::var(a));
  return {PoissonStructure(chart, P, gamma), fr};
}

CanonicalConstants transform_constants(const CanonicalConstants& c, const CanonicalTransform& t) {
  const std::size_t n = c.dim();
  if (t.N.rows() != n || t.N.cols() != n || t.V.size() != n) throw DomainError("transform dimension mismatch");
  auto Linv = t.N.inverse();
  if (!Linv) throw DomainError("N is singular");
  const ScalarMatrix& L = *Linv;
  const auto& V = t.V;

  // Constants in Ψ = Φ' - V, before rotating the upper indices.
  CanonicalConstants h(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        GR fv;
        for (std::size_t k = 0; k < n; ++k) fv += c.f(a, b, k) * L(k, x);
        h.f(a, b, x) = fv;
        for (std::size_t y = 0; y < n; ++y) {
          GR rv;
          for (std::size_t k = 0; k < n; ++k) {
            if (L(k, x).is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) rv += c.Rt(a, b, k, l) * L(k, x) * L(l, y);
          }
          h.Rt(a, b, x, y) = rv;
        }
      }
    }
  // Shift Ψ = Φ' - V.
  CanonicalConstants s(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      GR gv = c.g(a, b);
      for (std::size_t x = 0; x < n; ++x) {
        GR fv = h.f(a, b, x);
        gv -= h.f(a, b, x) * V[x];
        for (std::size_t y = 0; y < n; ++y) {
          s.Rt(a, b, x, y) = h.Rt(a, b, x, y);
          fv -= h.Rt(a, b, x, y) * V[y];
          gv += kHalf * h.Rt(a, b, x, y) * V[x] * V[y];
        }
        s.f(a, b, x) = fv;
      }
      s.g(a, b) = gv;
    }
  // Rotate both upper indices by N.
  auto rotate = [&](auto&& get) {
    std::vector<GR> out(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        GR v;
        for (std::size_t p = 0; p < n; ++p) {
          if (t.N(a, p).is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q)
            if (!t.N(b, q).is_zero()) v += t.N(a, p) * t.N(b, q) * get(p, q);
        }
        out[a * n + b] = v;
      }
    return out;
  };
  CanonicalConstants out(n);
  auto gr = rotate([&](std::size_t p, std::size_t q) { return s.g(p, q); });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.g(a, b) = gr[a * n + b];
  for (std::size_t x = 0; x < n; ++x) {
    auto fr = rotate([&](std::size_t p, std::size_t q) { return s.f(p, q, x); });
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out.f(a, b, x) = fr[a * n + b];
    for (std::size_t y = 0; y < n; ++y) {
      auto rr = rotate([&](std::size_t p, std::size_t q) { return s.Rt(p, q, x, y); });
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.Rt(a, b, x, y) = rr[a * n + b];
    }
  }
  return out;
}

std::optional<CanonicalTransform> find_torsion_zero(const CanonicalConstants& c) {
  const std::size_t n = c.dim();
  if (c.f_is_zero()) return CanonicalTransform::identity(n);
  ScalarMatrix A(n * n * n, n);
  std::vector<GR> rhs(n * n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x, ++row) {
        for (std::size_t y = 0; y < n; ++y) A(row, y) = c.Rt(a, b, x, y);
        rhs[row] = c.f(a, b, x);
      }
  auto V = A.solve(rhs);
  if (!V) return std::nullopt;
  return CanonicalTransform::translation(*V);
}

Tensor frame_curvature(const PoissonStructure& s) {
  const std::size_t n = s.dim();
  const ExprMatrix& Pinv = s.require_P_inverse();
  const Tensor Rt = curvature(s.gamma(), ConnectionKind::gamma_tilde);
  // Raise the two form slots, then lower the first.
  Tensor step(n, {up(), down(), up(Basis::frame), up(Basis::frame)});
  for_each_index(n, 4, [&](const Tensor::Index& i) {
    RatExpr v;
    for (std::size_t f = 0; f < n; ++f) {
      if (s.P(i[2], f).is_zero()) continue;
      for (std::size_t g = 0; g < n; ++g)
        if (!s.P(i[3], g).is_zero()) v += s.P(i[2], f) * s.P(i[3], g) * Rt({i[0], i[1], f, g});
    }
    step(i) = v;
  });
  Tensor out(n, {down(Basis::frame), down(), up(Basis::frame), up(Basis::frame)});
  for_each_index(n, 4, [&](const Tensor::Index& i) {
    RatExpr v;
    for (std::size_t e = 0; e < n; ++e)
      if (!Pinv(i[0], e).is_zero()) v += Pinv(i[0], e) * step({e, i[1], i[2], i[3]});
    out(i) = v;
  });
  return out;
}

Tensor frame_torsion(const PoissonStructure& s) {
  const std::size_t n = s.dim();
  const ExprMatrix& Pinv = s.require_P_inverse();
  const Tensor T = torsion(s);
  Tensor out(n, {down(Basis::frame), up(Basis::frame), up(Basis::frame)});
  for_each_index(n, 3, [&](const Tensor::Index& i) {
    RatExpr v;
    for (std::size_t e = 0; e < n; ++e) {
      if (Pinv(i[0], e).is_zero()) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (s.P(i[1], f).is_zero()) continue;
        for (std::size_t g = 0; g < n; ++g)
          if (!s.P(i[2], g).is_zero()) v += Pinv(i[0], e) * s.P(i[1], f) * s.P(i[2], g) * T({e, f, g});
      }
    }
    out(i) = v;
  });
  return out;
}

std::vector<DiffForm> frame_forms(const Frame& fr) {
  const std::size_t n = fr.Minv.rows();
  std::vector<DiffForm> e(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      if (!fr.Minv(a, x).is_zero()) e[a] += DiffForm::dx(x) * fr.Minv(a, x);
  return e;
}

VerificationReport frame_report(const PoissonStructure& s, const Frame& fr) {
  const Chart& chart = s.chart();
  const std::size_t n = s.dim();
  const auto e = frame_forms(fr);
  VerificationReport report;

  Check ef("frame.e-functions", chart);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      ef.expect_zero(s.bracket(e[a], DiffForm(RatExpr::var(x))), "(e" + std::to_string(a) + ", " + chart.name(x) + ")");
  report.add(ef.finish());

  const Tensor Rf = frame_curvature(s);
  Check ee("frame.e-e", chart);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      DiffForm r = s.bracket(e[a], e[b]);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const RatExpr& k = Rf({a, b, c, d});
          if (!k.is_zero()) r += wedge(e[c], e[d]) * (RatExpr(kHalf) * k);
        }
      ee.expect_zero(r, "(e" + std::to_string(a) + ", e" + std::to_string(b) + ")");
    }
  report.add(ee.finish());

  Check tor("frame.torsion", chart);
  const Tensor Tf = frame_torsion(s);
  for_each_index(n, 3, [&](const Tensor::Index& i) {
    tor.expect_zero(Tf(i) - s.P(i[1], i[2]).diff(i[0]), "T" + idx_label({i[0], i[1], i[2]}));
  });
  report.add(tor.finish());

  Check nt("frame.nabla-T", chart);
  const Tensor Rt = curvature(s.gamma(), ConnectionKind::gamma_tilde);
  const Tensor DT = covariant_derivative(torsion(s), s.gamma());
  for_each_index(n, 4, [&](const Tensor::Index& i) {
    nt.expect_zero(Rt(i) - DT({i[0], i[2], i[3], i[1]}), "R~" + idx_label({i[0], i[1], i[2], i[3]}));
  });
  report.add(nt.finish());
  return report;
}

FormsWithReport e_basis(const PoissonStructure& s, const Frame& fr) { return {frame_forms(fr), frame_report(s, fr)}; }

XiResult xi_realization(const PoissonStructure& s, const Frame& fr, const CanonicalConstants& c,
                        const SamplePlan& plan) {
  const Chart& chart = s.chart();
  const std::size_t n = s.dim();
  if (c.dim() != n) throw DomainError("constants dimension mismatch");
  const auto e = frame_forms(fr);
  XiResult out;
  for (std::size_t a = 0; a < n; ++a) out.xi -= e[a] * fr.Phi[a];
  const DiffForm& xi = out.xi;

  Check fn("xi.functions", chart);
  for (std::size_t x = 0; x < n; ++x) {
    const DiffForm h(RatExpr::var(x));
    fn.expect_zero(s.bracket(xi, h) - ext_d(h, chart), chart.name(x));
  }
  SampleRng rng(plan.seed);
  for (unsigned k = 0; k < plan.count; ++k) {
    const DiffForm h(random_polynomial(rng, chart, plan.max_degree + 1, 3));
    fn.expect_zero(s.bracket(xi, h) - ext_d(h, chart), to_string(h.as_function(), chart));
  }
  out.report.add(fn.finish());

  Check of("xi.one-forms", chart);
  for (std::size_t x = 0; x < n; ++x) {
    DiffForm r = s.bracket(xi, DiffForm::dx(x));
    for (std::size_t a = 0; a < n; ++a) {
      if (fr.M(x, a).is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!c.f(p, q, a).is_zero()) r += wedge(e[p], e[q]) * (RatExpr(kHalf * c.f(p, q, a)) * fr.M(x, a));
    }
    of.expect_zero(r, "(xi, d[" + chart.name(x) + "])");
  }
  out.report.add(of.finish());

  Check dx("xi.d-xi", chart);
  {
    DiffForm r = ext_d(xi, chart);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        RatExpr coeff(c.g(a, b));
        for (std::size_t k = 0; k < n; ++k)
          if (!c.f(a, b, k).is_zero()) coeff += RatExpr(kHalf * c.f(a, b, k)) * fr.Phi[k];
        if (!coeff.is_zero()) r -= wedge(e[a], e[b]) * coeff;
      }
    dx.expect_zero(r, "d xi");
  }
  out.report.add(dx.finish());

  Check fm("xi.forms", chart);
  if (!c.f_is_zero()) {
    fm.not_applicable("f is nonzero");
  } else {
    for (const auto& w : sample_forms(chart, plan))
      fm.expect_zero(s.bracket(xi, w) - ext_d(w, chart), to_string(w, chart));
    for (const auto& w : generators(chart)) fm.expect_zero(s.bracket(xi, w) - ext_d(w, chart), to_string(w, chart));
  }
  out.report.add(fm.finish());
  return out;
}

}  // namespace pdalg
