#include "pdalg/sampling.hpp"

#include <algorithm>

namespace pdalg {

namespace {

GaussianRational small_coefficient(SampleRng& rng, const Chart& chart) {
  long re = 0;
  while (re == 0) re = rng.uniform(-3, 3);
  long im = chart.is_complex() ? rng.uniform(-1, 1) : 0;
  return {Rational(re), Rational(im)};
}

Monomial random_monomial(SampleRng& rng, const Chart& chart, unsigned max_degree) {
  Monomial m;
  if (chart.dim() == 0) return m;
  long deg = rng.uniform(0, static_cast<long>(max_degree));
  for (long k = 0; k < deg; ++k) m = m * Monomial::var(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(chart.dim()) - 1)));
  return m;
}

}  // namespace

RatExpr random_polynomial(SampleRng& rng, const Chart& chart, unsigned max_degree, unsigned terms) {
  std::vector<Polynomial::Term> out;
  for (unsigned t = 0; t < terms; ++t) out.emplace_back(random_monomial(rng, chart, max_degree), small_coefficient(rng, chart));
  return RatExpr(Polynomial::from_terms(std::move(out)));
}

DiffForm random_monomial_form(SampleRng& rng, const Chart& chart, unsigned max_form_degree) {
  const long n = static_cast<long>(chart.dim());
  long k = rng.uniform(0, std::min<long>(max_form_degree, n));
  std::vector<std::size_t> pool(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::vector<std::size_t> picked;
  for (long j = 0; j < k; ++j) {
    auto at = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1));
    picked.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<long>(at));
  }
  std::sort(picked.begin(), picked.end());
  Monomial m = random_monomial(rng, chart, 2);
  GaussianRational c = small_coefficient(rng, chart);
  return DiffForm::term(mask_of(picked), RatExpr(Polynomial::monomial(m, c)));
}

std::vector<DiffForm> sample_forms(const Chart& chart, const SamplePlan& plan) {
  SampleRng rng(plan.seed);
  std::vector<DiffForm> out;
  out.reserve(plan.count);
  for (unsigned i = 0; i < plan.count; ++i) out.push_back(random_monomial_form(rng, chart, plan.max_degree));
  return out;
}

std::vector<DiffForm> generators(const Chart& chart) {
  std::vector<DiffForm> out;
  for (std::size_t a = 0; a < chart.dim(); ++a) out.emplace_back(RatExpr::var(a));
  for (std::size_t a = 0; a < chart.dim(); ++a) out.push_back(DiffForm::dx(a));
  return out;
}

}  // namespace pdalg
