#pragma once

#include <map>
#include <string>
#include <utility>

#include "qgl/errors.hpp"
#include "qgl/laurent_poly.hpp"

namespace qgl {

/// Multiset of canonical denominator atoms (see canonicalize()).
using AtomSet = std::map<LaurentPoly, int>;

/// poly = unit_coeff * unit_mono * prod atoms^e, atoms canonical.
struct AtomFactorization {
    Rational unit_coeff{1};
    Monomial unit_mono;
    AtomSet atoms;
};

/// Cyclotomic polynomial Phi_d as integer coefficients of x^0..x^deg.
const std::vector<std::int64_t>& cyclotomic(int d);

/// Factors (1 - m) into cyclotomic atoms in the primitive root of m.
AtomFactorization binomial_atoms(const Monomial& m);

/// Splits a nonzero polynomial into atoms: binomial factors found by trial
/// division are split cyclotomically, whatever remains is one atom.
AtomFactorization split_atoms(const LaurentPoly& p);

/// Product of (1 - arg)^exp factors times a unit.
class FactoredScalar {
public:
    FactoredScalar() = default;
    FactoredScalar(const Rational& c, const Monomial& m = Monomial()) : coeff_(c), mono_(m) {}  // NOLINT

    /// (1 - arg)^exp
    static FactoredScalar factor(const Monomial& arg, int exp = 1);

    const Rational& coeff() const { return coeff_; }
    const Monomial& mono() const { return mono_; }
    /// Oriented factors: every key is lex-positive.
    const std::map<Monomial, int>& factors() const { return factors_; }
    /// Net exponent of literal (1 - 1) factors.
    int degenerate() const { return degenerate_; }

    bool is_zero() const { return coeff_.is_zero() || degenerate_ > 0; }

    FactoredScalar& mul_factor(const Monomial& arg, int exp = 1);
    FactoredScalar& operator*=(const FactoredScalar& o);
    friend FactoredScalar operator*(FactoredScalar a, const FactoredScalar& b) { return a *= b; }
    FactoredScalar inverse() const;
    FactoredScalar pow(int e) const;
    FactoredScalar times(const Rational& c, const Monomial& m = Monomial()) const;
    FactoredScalar substitute(const MonomialMap& map) const;

    /// Same factor multiset (unit ignored).
    bool same_factors(const FactoredScalar& o) const {
        return factors_ == o.factors_ && degenerate_ == o.degenerate_;
    }
    /// Copy with unit 1.
    FactoredScalar without_unit() const;

    friend bool operator==(const FactoredScalar&, const FactoredScalar&) = default;
    friend bool operator<(const FactoredScalar& a, const FactoredScalar& b);

    /// Product form, e.g. `1*q1^1 * (1-q3^1)^1 * (1-q1^1*q3^1)^-1`.
    std::string to_string() const;

private:
    Rational coeff_{1};
    Monomial mono_;
    std::map<Monomial, int> factors_;
    int degenerate_ = 0;
};

/// Exact rational function num / prod(atoms^e).
///
/// The denominator is carried as a multiset of canonical atoms; addition
/// takes the atom-wise maximum, so no polynomial GCD is ever needed.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& c) : num_(c) {}          // NOLINT
    Scalar(std::int64_t c) : num_(Rational(c)) {}   // NOLINT
    Scalar(const LaurentPoly& p) : num_(p) {}       // NOLINT
    Scalar(const Monomial& m) : num_(m) {}          // NOLINT

    static Scalar from_factored(const FactoredScalar& f);
    static Scalar quotient(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const AtomSet& den_atoms() const { return den_; }
    LaurentPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;
    Scalar pow(int e) const;

    /// Cross-multiplication test.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Removes denominator atoms that divide the numerator exactly.
    Scalar cancelled() const;
    Scalar substitute(const MonomialMap& map) const;

    /// `(num)/(den)` on the cancelled form; polynomials print over `(1)`.
    std::string to_string() const;
    static Scalar parse(const std::string& text);

private:
    LaurentPoly num_;
    AtomSet den_;
};

inline Scalar expand_factored(const FactoredScalar& f) { return Scalar::from_factored(f); }
inline bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

}  // namespace qgl
