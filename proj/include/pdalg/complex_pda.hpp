#pragma once

#include <optional>
#include <vector>

#include "pdalg/canonical.hpp"
#include "pdalg/report.hpp"
#include "pdalg/sampling.hpp"
#include "pdalg/structure.hpp"

namespace pdalg {

/// Splits frame indices on a complex chart: A is unbarred when e_A is a
/// (1,0)-form and barred when it is a (0,1)-form. `conj[A]` is the index with
/// Φ^{conj[A]} = (Φ^A)^*, when such an index exists.
struct FrameSplit {
  std::vector<bool> unbarred;
  std::vector<std::optional<std::size_t>> conj;
};

/// Throws DomainError("frame not block-split") when some e_A mixes types.
FrameSplit split_frame(const PoissonStructure& s, const Frame& fr);

/// The complex-chart axioms (δ and δ̄ Leibniz rules, bidegree additivity,
/// hermiticity) and block-diagonality of Γ. With a frame, also
///   complex.phi-conjugate   (φ^a)^* = φ^ā
/// and with constants
///   complex.Rt-conjugate    (Rt^{AB}_{CD})^* = -Rt^{ĀB̄}_{C̄D̄}
///   complex.Rt-pattern      Rt^{AB}_{CD} = 0 unless upper and lower barred counts agree.
/// Throws DomainError on a real chart.
VerificationReport verify_complex_axioms(const PoissonStructure& s, const SamplePlan& plan = {},
                                         const Frame* fr = nullptr, const CanonicalConstants* c = nullptr);

struct EtaResult {
  DiffForm eta;
  DiffForm eta_bar;
  VerificationReport report;
};

/// η = -Σ_a e_a φ^a and η̄ = -Σ_ā e_ā φ^ā, with checks
///   eta.conjugate       η^* = -η̄
///   eta.type            η is (1,0), η̄ is (0,1)
///   eta.functions       (η,x^i) = dx^i, (η,x^ī) = 0, (η̄,x^ī) = dx^ī, (η̄,x^i) = 0
///   eta.realization     δω = (η,ω), δ̄ω = (η̄,ω) on sampled forms, only when f = 0
EtaResult eta_forms(const PoissonStructure& s, const Frame& fr, const CanonicalConstants& c,
                    const SamplePlan& plan = {});

struct KahlerResult {
  DiffForm K;
  VerificationReport report;
};

/// K = δ̄η by default (requires f = 0), or K = h^{ab̄} e_a e_b̄ for a constant
/// hermitian matrix h over the unbarred indices in increasing order. Checks
///   kahler.central          (K,x^a) = (K,dx^a) = 0
///   kahler.frame-form       δ̄η = g^{ab̄} e_a e_b̄ = δη̄ (default K only)
///   kahler.delta-eta        δη = g^{ab} e_a e_b, δ̄η̄ = g^{āb̄} e_ā e_b̄
///   kahler.closed           δK = δ̄K = 0, when g^{ab} = g^{āb̄} = 0
///   kahler.star             K^* = K
/// Throws DomainError for f ≠ 0 on the default path or a degenerate or
/// non-hermitian h.
KahlerResult kahler_form(const PoissonStructure& s, const Frame& fr, const CanonicalConstants& c,
                         const std::optional<ScalarMatrix>& h = std::nullopt);

/// Symmetric frame metric h^{AB} with h^{ab̄} = h^{b̄a} = H[a][b]; the
/// coordinate metric is h_{αβ} = h^{AB} M_{Aα} M_{Bβ}.
ExprMatrix coordinate_metric(const Frame& fr, const ScalarMatrix& hAB);
ScalarMatrix hermitian_frame_metric(const FrameSplit& split, const ScalarMatrix& H);

}  // namespace pdalg
