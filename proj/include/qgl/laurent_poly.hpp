#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgl/monomial.hpp"
#include "qgl/rational.hpp"

namespace qgl {

/// Sparse Laurent polynomial over Q in the registry variables.
///
/// Terms are kept sorted ascending by exponent vector (lexicographic in
/// registry order) with no zero coefficients, so structural equality is
/// polynomial equality.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constants embed implicitly
    LaurentPoly(const Monomial& m, const Rational& c = 1);
    /// Takes arbitrary terms; sorts and combines them.
    static LaurentPoly from_terms(std::vector<Term> terms);
    static LaurentPoly var(Var v, int e = 1) { return LaurentPoly(Monomial(v, e)); }
    /// 1 - m
    static LaurentPoly one_minus(const Monomial& m);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Coefficient of the unit monomial.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    const Term& leading() const { return terms_.back(); }
    /// Componentwise minimum / maximum exponent over all terms.
    Monomial min_exponents() const;
    Monomial max_exponents() const;
    bool involves(Var v) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly times(const Monomial& m) const;
    LaurentPoly pow(unsigned e) const;
    LaurentPoly substitute(const MonomialMap& map) const;

    /// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

    /// Splits by the exponents of the given variables: key is the monomial in
    /// `vars`, value is the cofactor polynomial in the remaining variables.
    std::map<Monomial, LaurentPoly> group_by(const std::vector<Var>& vars) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    /// Canonical text: terms `c*q1^a*q3^b` joined by `+`, ascending exponent order.
    std::string to_string() const;
    /// Accepts the canonical text plus ordinary `a-b` and bare variables; `q2`
    /// is rewritten as q1^-1*q3^-1.
    static LaurentPoly parse(const std::string& text);

private:
    void combine_sorted();

    std::vector<Term> terms_;
};

/// Canonical representative of a polynomial up to units of Q[vars^{+-1}]:
/// poly = unit_coeff * unit_mono * canonical, where canonical has every
/// variable's minimum exponent 0, primitive integer coefficients and a
/// positive lowest-order coefficient.
struct CanonicalForm {
    Rational unit_coeff;
    Monomial unit_mono;
    LaurentPoly canonical;
};
CanonicalForm canonicalize(const LaurentPoly& p);

}  // namespace qgl
