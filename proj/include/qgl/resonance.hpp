#pragma once

#include "qgl/scalar.hpp"

namespace qgl {

/// q1 -> p^(k+1), q3 -> p^(r-1). Throws UnsupportedResonance unless
/// k >= 1, r >= 2 and gcd(k+1, r-1) = 1.
MonomialMap resonance_map(int k, int r);

/// Specializes f at q1^(1-r) q3^(k+1) = 1. Factors (1 - x^a) whose argument
/// collapses to 1 are cancelled in numerator/denominator pairs with limit
/// ratio a_num / a_den; a surplus in the numerator gives 0, in the
/// denominator ResonanceSingular.
FactoredScalar resonance_reduce(const FactoredScalar& f, int k, int r);

Scalar resonance_normalize(const FactoredScalar& f, int k, int r);

}  // namespace qgl
