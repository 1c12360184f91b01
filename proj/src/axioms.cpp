#include "pdalg/axioms.hpp"

#include "pdalg/expr_io.hpp"

namespace pdalg {

namespace {

int sign(unsigned exponent) { return exponent % 2 == 0 ? 1 : -1; }

DiffForm signed_form(int s, const DiffForm& f) { return s > 0 ? f : -f; }

}  // namespace

DiffForm jacobi_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g, const DiffForm& h) {
  DiffForm out;
  for (const auto& [df, fp] : f.homogeneous_parts())
    for (const auto& [dg, gp] : g.homogeneous_parts())
      for (const auto& [dh, hp] : h.homogeneous_parts()) {
        const unsigned pf = df % 2, pg = dg % 2, ph = dh % 2;
        out += s.bracket(fp, s.bracket(gp, hp));
        out += signed_form(sign(pf * (pg + ph)), s.bracket(gp, s.bracket(hp, fp)));
        out += signed_form(sign(ph * (pf + pg)), s.bracket(hp, s.bracket(fp, gp)));
      }
  return out;
}

DiffForm symmetry_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g) {
  DiffForm out;
  for (const auto& [df, fp] : f.homogeneous_parts())
    for (const auto& [dg, gp] : g.homogeneous_parts())
      out += s.bracket(fp, gp) - signed_form(sign((df % 2) * (dg % 2) + 1), s.bracket(gp, fp));
  return out;
}

DiffForm derivation_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g, const DiffForm& h) {
  DiffForm out;
  for (const auto& [df, fp] : f.homogeneous_parts())
    for (const auto& [dg, gp] : g.homogeneous_parts()) {
      out += s.bracket(fp, wedge(gp, h));
      out -= wedge(s.bracket(fp, gp), h);
      out -= signed_form(sign((df % 2) * (dg % 2)), wedge(gp, s.bracket(fp, h)));
    }
  return out;
}

DiffForm leibniz_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g, DerivativeMode mode) {
  const Chart& chart = s.chart();
  DiffForm out;
  for (const auto& [df, fp] : f.homogeneous_parts()) {
    out += ext_d(s.bracket(fp, g), chart, mode);
    out -= s.bracket(ext_d(fp, chart, mode), g);
    out -= signed_form(sign(df % 2), s.bracket(fp, ext_d(g, chart, mode)));
  }
  return out;
}

DiffForm hermiticity_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g) {
  const Chart& chart = s.chart();
  DiffForm out;
  for (const auto& [df, fp] : f.homogeneous_parts())
    for (const auto& [dg, gp] : g.homogeneous_parts())
      out += star(s.bracket(fp, gp), chart) -
             signed_form(sign((df % 2) * (dg % 2)), s.bracket(star(gp, chart), star(fp, chart)));
  return out;
}

std::string tuple_label(const std::vector<DiffForm>& forms, const Chart& chart) {
  std::string out = "(";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i) out += ", ";
    out += to_string(forms[i], chart);
  }
  return out + ")";
}

namespace {

// Terms of (f,g) whose degree differs from deg f + deg g, per homogeneous split.
DiffForm degree_violation(const PoissonStructure& s, const DiffForm& f, const DiffForm& g) {
  DiffForm bad;
  for (const auto& [df, fp] : f.homogeneous_parts())
    for (const auto& [dg, gp] : g.homogeneous_parts())
      for (const auto& [m, c] : s.bracket(fp, gp).terms())
        if (mask_degree(m) != df + dg) bad.add_term(m, c);
  return bad;
}

DiffForm bidegree_violation(const PoissonStructure& s, const DiffForm& f, const DiffForm& g) {
  const Chart& chart = s.chart();
  DiffForm bad;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      auto [hf, af] = bidegree(mf, chart);
      auto [hg, ag] = bidegree(mg, chart);
      DiffForm b = s.bracket(DiffForm::term(mf, cf), DiffForm::term(mg, cg));
      for (const auto& [m, c] : b.terms()) {
        auto [h, a] = bidegree(m, chart);
        if (h != hf + hg || a != af + ag) bad.add_term(m, c);
      }
    }
  return bad;
}

const char* jacobi_name(unsigned forms_in_triple) {
  static const char* names[] = {"axioms.jacobi[x,x,x]", "axioms.jacobi[x,x,dx]", "axioms.jacobi[x,dx,dx]",
                                "axioms.jacobi[dx,dx,dx]"};
  return names[forms_in_triple];
}

}  // namespace

VerificationReport verify_axioms(const PoissonStructure& s, const SamplePlan& plan) {
  const Chart& chart = s.chart();
  const std::vector<DiffForm> gens = generators(chart);
  const std::vector<DiffForm> samples = sample_forms(chart, plan);
  const std::size_t n = chart.dim();
  auto is_form = [n](std::size_t i) { return i >= n ? 1u : 0u; };

  std::vector<std::pair<DiffForm, DiffForm>> pairs;
  for (const auto& a : gens)
    for (const auto& b : gens) pairs.emplace_back(a, b);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) pairs.emplace_back(samples[i], samples[i + 1]);
  if (samples.size() == 1) pairs.emplace_back(samples[0], samples[0]);

  std::vector<std::vector<DiffForm>> triples;
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) triples.push_back({a, b, c});
  for (std::size_t i = 0; i < samples.size(); ++i)
    triples.push_back({samples[i], samples[(i + 1) % samples.size()], samples[(i + 2) % samples.size()]});

  VerificationReport report;

  Check symmetry("axioms.symmetry", chart);
  Check leibniz("axioms.leibniz-d", chart);
  Check degree("axioms.degree", chart);
  for (const auto& [f, g] : pairs) {
    const std::string loc = tuple_label({f, g}, chart);
    symmetry.expect_zero(symmetry_residual(s, f, g), loc);
    leibniz.expect_zero(leibniz_residual(s, f, g), loc);
    degree.expect_zero(degree_violation(s, f, g), loc);
  }
  report.add(symmetry.finish());
  report.add(leibniz.finish());
  report.add(degree.finish());

  std::vector<Check> jacobi;
  for (unsigned k = 0; k < 4; ++k) jacobi.emplace_back(jacobi_name(k), chart);
  Check jacobi_samples("axioms.jacobi[samples]", chart);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b)
      for (std::size_t c = b; c < gens.size(); ++c) {
        unsigned k = is_form(a) + is_form(b) + is_form(c);
        jacobi[k].expect_zero(jacobi_residual(s, gens[a], gens[b], gens[c]),
                              tuple_label({gens[a], gens[b], gens[c]}, chart));
      }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& t = triples[gens.size() * gens.size() * gens.size() + i];
    jacobi_samples.expect_zero(jacobi_residual(s, t[0], t[1], t[2]), tuple_label(t, chart));
  }
  for (auto& j : jacobi) report.add(j.finish());
  report.add(jacobi_samples.finish());

  Check derivation("axioms.derivation", chart);
  for (const auto& t : triples) derivation.expect_zero(derivation_residual(s, t[0], t[1], t[2]), tuple_label(t, chart));
  report.add(derivation.finish());

  if (chart.is_complex()) {
    Check ld("axioms.leibniz-delta", chart);
    Check lbd("axioms.leibniz-deltabar", chart);
    Check bideg("axioms.bidegree", chart);
    Check herm("axioms.hermiticity", chart);
    for (const auto& [f, g] : pairs) {
      const std::string loc = tuple_label({f, g}, chart);
      ld.expect_zero(leibniz_residual(s, f, g, DerivativeMode::holo), loc);
      lbd.expect_zero(leibniz_residual(s, f, g, DerivativeMode::antiholo), loc);
      bideg.expect_zero(bidegree_violation(s, f, g), loc);
      herm.expect_zero(hermiticity_residual(s, f, g), loc);
    }
    report.add(ld.finish());
    report.add(lbd.finish());
    report.add(bideg.finish());
    report.add(herm.finish());
  }
  return report;
}

}  // namespace pdalg
