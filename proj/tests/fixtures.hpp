#pragma once

#include <string>
#include <vector>

#include "pdalg/canonical.hpp"
#include "pdalg/one_dim.hpp"

namespace fixture {

using pdalg::CanonicalConstants;

/// R̃ = f = 0, g standard symplectic, in dim 2k.
inline CanonicalConstants darboux_constants(std::size_t pairs) {
  CanonicalConstants c(2 * pairs);
  for (std::size_t k = 0; k < pairs; ++k) c.set_g(k, pairs + k, 1);
  return c;
}

/// P^{01} = Φ0² + 1.
inline CanonicalConstants rt_dim2() {
  CanonicalConstants c(2);
  c.set_Rt(0, 1, 0, 0, 2);
  c.set_g(0, 1, 1);
  return c;
}

/// P^{01} = Φ0 + 1.
inline CanonicalConstants f_dim2() {
  CanonicalConstants c(2);
  c.set_f(0, 1, 0, 1);
  c.set_g(0, 1, 1);
  return c;
}

/// P^{01} = Φ0 Φ1 + Φ1² + 1/2 Φ0 + 3, nonzero R̃ and f together.
inline CanonicalConstants rt_f_dim2() {
  CanonicalConstants c(2);
  c.set_Rt(0, 1, 0, 1, 1);
  c.set_Rt(0, 1, 1, 1, 2);
  c.set_f(0, 1, 0, pdalg::GaussianRational(pdalg::Rational(1, 2)));
  c.set_g(0, 1, 3);
  return c;
}

/// Only the Yang-Baxter equation fails: P^{01} = Φ0 Φ2, P^{12} = Φ0 Φ1.
inline CanonicalConstants bad_cybe_dim3() {
  CanonicalConstants c(3);
  c.set_Rt(0, 1, 0, 2, 1);
  c.set_Rt(1, 2, 0, 1, 1);
  return c;
}

inline pdalg::HermitianTriple triple(long a, pdalg::GaussianRational b, long c) {
  return {pdalg::Rational(a), b, pdalg::Rational(c)};
}

/// The complex fixtures used throughout: sphere, Lobachevskian plane, a
/// degenerate P and a generic triple with b ≠ 0.
inline std::vector<pdalg::HermitianTriple> one_dim_triples() {
  return {triple(1, 0, 1), triple(1, 0, -1), triple(0, 1, 0),
          triple(2, pdalg::GaussianRational(1, 3), -1)};
}

}  // namespace fixture
