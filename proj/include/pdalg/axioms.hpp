#pragma once

#include <string>

#include "pdalg/report.hpp"
#include "pdalg/sampling.hpp"
#include "pdalg/structure.hpp"

namespace pdalg {

/// Checks the defining properties of the bracket on all generator pairs and
/// triples plus sampled monomial forms:
///   axioms.symmetry        (f,g) = (-1)^{pq+1} (g,f)
///   axioms.jacobi[...]     graded Jacobi, split by generator type, plus samples
///   axioms.derivation      (f,gh) = (f,g)h + (-1)^{pq} g(f,h)
///   axioms.leibniz-d       d(f,g) = (df,g) + (-1)^p (f,dg)
///   axioms.degree          deg (f,g) = deg f + deg g
/// and on complex charts additionally
///   axioms.leibniz-delta, axioms.leibniz-deltabar, axioms.bidegree,
///   axioms.hermiticity     (f,g)* = (-1)^{pq} (g*, f*).
VerificationReport verify_axioms(const PoissonStructure& s, const SamplePlan& plan = {});

/// Parity-aware residuals, exposed for tests. Arguments may be inhomogeneous.
DiffForm jacobi_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g, const DiffForm& h);
DiffForm symmetry_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g);
DiffForm derivation_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g, const DiffForm& h);
DiffForm leibniz_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g,
                          DerivativeMode mode = DerivativeMode::full);
DiffForm hermiticity_residual(const PoissonStructure& s, const DiffForm& f, const DiffForm& g);

/// "(q, p, d[q])"-style label for a tuple of forms.
std::string tuple_label(const std::vector<DiffForm>& forms, const Chart& chart);

}  // namespace pdalg
