#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pdalg/chart.hpp"
#include "pdalg/forms.hpp"

namespace pdalg {

/// How verifiers sample random inputs. The seed fully determines the samples.
struct SamplePlan {
  unsigned max_degree = 2;
  unsigned count = 25;
  std::uint64_t seed = 0;
};

/// Deterministic generator; the draw sequence is the same on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Random polynomial with `terms` terms of total degree <= max_degree and
/// small integer (Gaussian integer on complex charts) coefficients.
RatExpr random_polynomial(SampleRng& rng, const Chart& chart, unsigned max_degree, unsigned terms);

/// A random single-term form c * x^m * dx^I with deg I <= max_form_degree.
DiffForm random_monomial_form(SampleRng& rng, const Chart& chart, unsigned max_form_degree);

std::vector<DiffForm> sample_forms(const Chart& chart, const SamplePlan& plan);

/// The generators x^a followed by dx^a.
std::vector<DiffForm> generators(const Chart& chart);

}  // namespace pdalg
