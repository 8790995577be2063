#include "qgl/resonance.hpp"

#include <numeric>

namespace qgl {

MonomialMap resonance_map(int k, int r) {
    if (k < 1 || r < 2) throw UnsupportedResonance("resonance requires k >= 1 and r >= 2");
    if (std::gcd(k + 1, r - 1) != 1)
        throw UnsupportedResonance("resonance requires gcd(k+1, r-1) = 1, got k=" + std::to_string(k) +
                                   " r=" + std::to_string(r));
    MonomialMap m;
    m.set(Var::q1, Monomial(Var::p, k + 1));
    m.set(Var::q3, Monomial(Var::p, r - 1));
    return m;
}

FactoredScalar resonance_reduce(const FactoredScalar& f, int k, int r) {
    MonomialMap map = resonance_map(k, r);
    if (f.coeff().is_zero()) return FactoredScalar(Rational(0));
    FactoredScalar out(f.coeff(), map.apply(f.mono()));
    int num_zeros = 0;
    int den_zeros = 0;
    Rational ratio(1);
    if (f.degenerate() < 0) throw ResonanceSingular("resonance_reduce: literal (1-1) in denominator");
    if (f.degenerate() > 0) return FactoredScalar(Rational(0));
    for (const auto& [a, e] : f.factors()) {
        Monomial image = map.apply(a);
        if (!image.is_one()) {
            out.mul_factor(image, e);
            continue;
        }
        // a = x^alpha with x = q1^(1-r) q3^(k+1)
        int alpha = a[Var::q3] / (k + 1);
        ratio *= Rational(alpha).pow(e);
        if (e > 0)
            num_zeros += e;
        else
            den_zeros -= e;
    }
    if (num_zeros > den_zeros) return FactoredScalar(Rational(0));
    if (den_zeros > num_zeros)
        throw ResonanceSingular("resonance_reduce: unmatched zero factor in denominator");
    return out.times(ratio);
}

Scalar resonance_normalize(const FactoredScalar& f, int k, int r) {
    return Scalar::from_factored(resonance_reduce(f, k, r));
}

}  // namespace qgl
