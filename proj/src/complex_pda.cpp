#include "pdalg/complex_pda.hpp"

#include <set>

#include "pdalg/axioms.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"
#include "pdalg/geometry.hpp"

namespace pdalg {

namespace {

void require_complex(const Chart& chart) {
  if (!chart.is_complex()) throw DomainError("a complex chart is required");
}

}  // namespace

FrameSplit split_frame(const PoissonStructure& s, const Frame& fr) {
  const Chart& chart = s.chart();
  require_complex(chart);
  const auto e = frame_forms(fr);
  FrameSplit out;
  for (const auto& form : e) {
    bool holo = false, anti = false;
    for (const auto& [m, c] : form.terms()) {
      if (mask_degree(m) != 1) throw DomainError("frame not block-split");
      (chart.is_holomorphic(mask_indices(m)[0]) ? holo : anti) = true;
    }
    if (holo == anti) throw DomainError("frame not block-split");
    out.unbarred.push_back(holo);
  }
  const auto& perm = chart.conj_permutation();
  for (std::size_t a = 0; a < fr.Phi.size(); ++a) {
    const RatExpr star_phi = fr.Phi[a].conjugated(perm);
    std::optional<std::size_t> hit;
    for (std::size_t b = 0; b < fr.Phi.size(); ++b)
      if (fr.Phi[b] == star_phi && out.unbarred[b] != out.unbarred[a]) hit = b;
    out.conj.push_back(hit);
  }
  return out;
}

VerificationReport verify_complex_axioms(const PoissonStructure& s, const SamplePlan& plan, const Frame* fr,
                                         const CanonicalConstants* c) {
  const Chart& chart = s.chart();
  require_complex(chart);
  static const std::set<std::string> kept = {"axioms.leibniz-delta", "axioms.leibniz-deltabar", "axioms.bidegree",
                                             "axioms.hermiticity"};
  VerificationReport report;
  const VerificationReport base = verify_axioms(s, plan);
  for (const auto& e : base.entries())
    if (kept.count(e.name)) report.add(e);
  report.add(check_block_diagonal(s));
  if (!fr) return report;

  const FrameSplit split = split_frame(s, *fr);
  Check pc("complex.phi-conjugate", chart);
  bool all_conj = true;
  for (std::size_t a = 0; a < split.conj.size(); ++a) {
    if (split.conj[a]) {
      pc.expect_zero(RatExpr(), "phi" + std::to_string(a));
      continue;
    }
    all_conj = false;
    pc.fail(DiffForm(fr->Phi[a].conjugated(chart.conj_permutation())), "phi" + std::to_string(a));
  }
  report.add(pc.finish());
  if (!c) return report;

  const std::size_t n = c->dim();
  Check rc("complex.Rt-conjugate", chart);
  Check rp("complex.Rt-pattern", chart);
  auto barred = [&](std::size_t a) { return split.unbarred[a] ? 0 : 1; };
  for (std::size_t A = 0; A < n; ++A)
    for (std::size_t B = 0; B < n; ++B)
      for (std::size_t C = 0; C < n; ++C)
        for (std::size_t D = 0; D < n; ++D) {
          const std::string loc = "Rt[" + std::to_string(A) + "," + std::to_string(B) + "," + std::to_string(C) +
                                  "," + std::to_string(D) + "]";
          if (barred(A) + barred(B) != barred(C) + barred(D)) rp.expect_zero(RatExpr(c->Rt(A, B, C, D)), loc);
          if (all_conj)
            rc.expect_zero(RatExpr(c->Rt(A, B, C, D).conj() +
                                   c->Rt(*split.conj[A], *split.conj[B], *split.conj[C], *split.conj[D])),
                           loc);
        }
  if (!all_conj) rc.not_applicable("frame indices have no conjugate partner");
  report.add(rc.finish());
  report.add(rp.finish());
  return report;
}

EtaResult eta_forms(const PoissonStructure& s, const Frame& fr, const CanonicalConstants& c, const SamplePlan& plan) {
  const Chart& chart = s.chart();
  const FrameSplit split = split_frame(s, fr);
  const auto e = frame_forms(fr);
  const std::size_t n = s.dim();
  EtaResult out;
  for (std::size_t a = 0; a < n; ++a) (split.unbarred[a] ? out.eta : out.eta_bar) -= e[a] * fr.Phi[a];
  const DiffForm& eta = out.eta;
  const DiffForm& eta_bar = out.eta_bar;

  Check cj("eta.conjugate", chart);
  cj.expect_zero(star(eta, chart) + eta_bar, "eta");
  out.report.add(cj.finish());

  Check ty("eta.type", chart);
  DiffForm mixed;
  for (const auto& [m, k] : eta.terms())
    if (bidegree(m, chart) != std::make_pair(1u, 0u)) mixed.add_term(m, k);
  ty.expect_zero(mixed, "eta");
  mixed = DiffForm();
  for (const auto& [m, k] : eta_bar.terms())
    if (bidegree(m, chart) != std::make_pair(0u, 1u)) mixed.add_term(m, k);
  ty.expect_zero(mixed, "eta_bar");
  out.report.add(ty.finish());

  Check fn("eta.functions", chart);
  for (std::size_t x = 0; x < n; ++x) {
    const DiffForm fx(RatExpr::var(x));
    const bool holo = chart.is_holomorphic(x);
    fn.expect_zero(s.bracket(eta, fx) - (holo ? DiffForm::dx(x) : DiffForm()), "(eta, " + chart.name(x) + ")");
    fn.expect_zero(s.bracket(eta_bar, fx) - (holo ? DiffForm() : DiffForm::dx(x)), "(eta_bar, " + chart.name(x) + ")");
  }
  out.report.add(fn.finish());

  Check rz("eta.realization", chart);
  if (!c.f_is_zero()) {
    rz.not_applicable("f is nonzero");
  } else {
    auto forms = generators(chart);
    for (const auto& w : sample_forms(chart, plan)) forms.push_back(w);
    for (const auto& w : forms) {
      const std::string loc = to_string(w, chart);
      rz.expect_zero(s.bracket(eta, w) - ext_d(w, chart, DerivativeMode::holo), "eta " + loc);
      rz.expect_zero(s.bracket(eta_bar, w) - ext_d(w, chart, DerivativeMode::antiholo), "eta_bar " + loc);
    }
  }
  out.report.add(rz.finish());
  return out;
}

KahlerResult kahler_form(const PoissonStructure& s, const Frame& fr, const CanonicalConstants& c,
                         const std::optional<ScalarMatrix>& h) {
  const Chart& chart = s.chart();
  const FrameSplit split = split_frame(s, fr);
  const auto e = frame_forms(fr);
  const std::size_t n = s.dim();
  DiffForm eta, eta_bar;
  for (std::size_t a = 0; a < n; ++a) (split.unbarred[a] ? eta : eta_bar) -= e[a] * fr.Phi[a];

  KahlerResult out;
  if (h) {
    const ScalarMatrix full = hermitian_frame_metric(split, *h);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (split.unbarred[a] && !split.unbarred[b] && !full(a, b).is_zero())
          out.K += wedge(e[a], e[b]) * RatExpr(full(a, b));
  } else {
    if (!c.f_is_zero()) throw DomainError("the default Kahler form requires f = 0");
    out.K = ext_d(eta, chart, DerivativeMode::antiholo);
  }
  const DiffForm& K = out.K;

  Check cen("kahler.central", chart);
  for (const auto& g : generators(chart)) cen.expect_zero(s.bracket(K, g), "(K, " + to_string(g, chart) + ")");
  out.report.add(cen.finish());

  auto g_form = [&](bool first_unbarred, bool second_unbarred) {
    DiffForm r;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (split.unbarred[a] == first_unbarred && split.unbarred[b] == second_unbarred && !c.g(a, b).is_zero())
          r += wedge(e[a], e[b]) * RatExpr(c.g(a, b));
    return r;
  };

  Check ff("kahler.frame-form", chart);
  if (h) {
    ff.not_applicable("user-supplied metric");
  } else {
    ff.expect_zero(K - g_form(true, false), "deltabar eta");
    ff.expect_zero(K - ext_d(eta_bar, chart, DerivativeMode::holo), "delta eta_bar");
  }
  out.report.add(ff.finish());

  Check de("kahler.delta-eta", chart);
  if (!c.f_is_zero()) {
    de.not_applicable("f is nonzero");
  } else {
    de.expect_zero(ext_d(eta, chart, DerivativeMode::holo) - g_form(true, true), "delta eta");
    de.expect_zero(ext_d(eta_bar, chart, DerivativeMode::antiholo) - g_form(false, false), "deltabar eta_bar");
  }
  out.report.add(de.finish());

  Check cl("kahler.closed", chart);
  if (!g_form(true, true).is_zero() || !g_form(false, false).is_zero() || !c.f_is_zero()) {
    cl.not_applicable("g^{ab} or g^{a'b'} is nonzero");
  } else {
    cl.expect_zero(ext_d(eta, chart, DerivativeMode::holo), "delta eta");
    cl.expect_zero(ext_d(eta_bar, chart, DerivativeMode::antiholo), "deltabar eta_bar");
    cl.expect_zero(ext_d(K, chart, DerivativeMode::holo), "delta K");
    cl.expect_zero(ext_d(K, chart, DerivativeMode::antiholo), "deltabar K");
  }
  out.report.add(cl.finish());

  Check st("kahler.star", chart);
  st.expect_zero(star(K, chart) - K, "K");
  out.report.add(st.finish());
  return out;
}

ScalarMatrix hermitian_frame_metric(const FrameSplit& split, const ScalarMatrix& H) {
  std::vector<std::size_t> u;
  for (std::size_t a = 0; a < split.unbarred.size(); ++a)
    if (split.unbarred[a]) u.push_back(a);
  if (H.rows() != u.size() || H.cols() != u.size()) throw DomainError("hermitian metric has the wrong size");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!(H(i, j) == H(j, i).conj())) throw DomainError("metric is not hermitian");
  if (H.determinant().is_zero()) throw DomainError("degenerate metric");
  const std::size_t n = split.unbarred.size();
  ScalarMatrix full(n, n);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (!split.conj[u[j]]) throw DomainError("frame index has no conjugate partner");
      const std::size_t bb = *split.conj[u[j]];
      full(u[i], bb) = H(i, j);
      full(bb, u[i]) = H(i, j);
    }
  return full;
}

ExprMatrix coordinate_metric(const Frame& fr, const ScalarMatrix& hAB) {
  const std::size_t n = fr.Minv.rows();
  ExprMatrix out(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      RatExpr v;
      for (std::size_t a = 0; a < n; ++a) {
        if (fr.Minv(a, x).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (!hAB(a, b).is_zero() && !fr.Minv(b, y).is_zero())
            v += RatExpr(hAB(a, b)) * fr.Minv(a, x) * fr.Minv(b, y);
      }
      out(x, y) = v;
    }
  return out;
}

}  // namespace pdalg
