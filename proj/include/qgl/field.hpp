#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "qgl/scalar.hpp"

namespace qgl {

/// Exact coefficients kept as sums of (product form) x (Scalar), so terms
/// sharing the same factors are combined before anything is expanded.
class SymbolicField {
public:
    using Elem = std::map<FactoredScalar, Scalar>;

    Elem zero() const { return {}; }
    Elem one() const { return scalar(Scalar(1)); }
    Elem scalar(const Scalar& s) const;
    Elem term(const FactoredScalar& coeff, const Monomial& mono) const;
    void add(Elem& acc, const Elem& x) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool is_zero(const Elem& a) const;
    Scalar to_scalar(const Elem& a) const;
    std::string render(const Elem& a) const { return to_scalar(a).to_string(); }
};

/// Thrown when a modular evaluation point hits a zero denominator.
struct DegenerateEvaluation : QglError {
    using QglError::QglError;
};

/// Arithmetic modulo 2^61 - 1 at a seeded random point for every variable.
class ModularField {
public:
    using Elem = std::uint64_t;
    static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

    explicit ModularField(std::uint64_t seed);

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem scalar(const Scalar& s) const;
    Elem term(const FactoredScalar& coeff, const Monomial& mono) const;
    void add(Elem& acc, const Elem& x) const { acc = addm(acc, x); }
    Elem mul(const Elem& a, const Elem& b) const { return mulm(a, b); }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : kPrime - a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    std::string render(const Elem& a) const { return std::to_string(a); }

    Elem eval(const Monomial& m) const;
    Elem eval(const Rational& r) const;
    Elem eval(const LaurentPoly& p) const;

    static Elem addm(Elem a, Elem b) {
        Elem s = a + b;
        return s >= kPrime ? s - kPrime : s;
    }
    static Elem mulm(Elem a, Elem b);
    static Elem powm(Elem a, std::uint64_t e);
    static Elem invm(Elem a);

private:
    std::array<Elem, kNumVars> values_{};
    std::array<Elem, kNumVars> inverses_{};
};

}  // namespace qgl
