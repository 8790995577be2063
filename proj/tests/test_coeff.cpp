#include <gtest/gtest.h>

#include "qgl/errors.hpp"
#include "qgl/resonance.hpp"
#include "qgl/scalar.hpp"
#include "qgl/series.hpp"

using namespace qgl;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
Scalar S(const std::string& s) { return Scalar(P(s)); }
Monomial q1(int e = 1) { return Monomial(Var::q1, e); }
Monomial q3(int e = 1) { return Monomial(Var::q3, e); }

}  // namespace

TEST(Rational, ReducesAndSigns) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational::parse("-3/2"), r);
    EXPECT_EQ((r * r.inverse()), Rational(1));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowIsReported) {
    Rational big(std::int64_t{1} << 62);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(LaurentPoly, RingBasics) {
    EXPECT_EQ(P("1-q1") + P("q1"), LaurentPoly(1));
    EXPECT_EQ(P("1-q1") * P("1+q1"), P("1-q1^2"));
    EXPECT_TRUE((-LaurentPoly()).is_zero());
    EXPECT_EQ(P("q2"), LaurentPoly(Monomial::q2()));
}

TEST(LaurentPoly, ExactDivision) {
    auto q = LaurentPoly::divide_exact(P("1-q1^3"), P("1-q1"));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, P("1+q1+q1^2"));
    EXPECT_FALSE(LaurentPoly::divide_exact(P("1-q1^3"), P("1-q3")).has_value());
}

TEST(LaurentPoly, TextRoundTrip) {
    LaurentPoly p = P("3*q1^-2*u - q3 + 1/2");
    EXPECT_EQ(LaurentPoly::parse(p.to_string()), p);
}

TEST(Scalar, EqualityIsCrossMultiplied) {
    EXPECT_EQ(Scalar::quotient(P("1-q1^2"), P("1-q1")), S("1+q1"));
    EXPECT_EQ(Scalar::quotient(LaurentPoly(), P("1-q3")), Scalar::quotient(LaurentPoly(), P("1-q1")));
    EXPECT_FALSE(Scalar::quotient(P("1-q1"), P("1-q3")) == Scalar(1));
}

TEST(Scalar, FieldOperations) {
    Scalar a = Scalar::quotient(P("1"), P("1-q1"));
    Scalar b = Scalar::quotient(P("q1"), P("1-q1"));
    EXPECT_EQ(a - b, Scalar(1));
    EXPECT_EQ(a * S("1-q1"), Scalar(1));
    EXPECT_EQ(a / a, Scalar(1));
    EXPECT_THROW(a / Scalar(), DivisionByZero);
}

TEST(Scalar, TextFormat) {
    EXPECT_EQ(Scalar(P("1+q1")).to_string(), "(1+1*q1^1)/(1)");
    Scalar s = Scalar::quotient(P("1-q1^2"), P("1-q1"));
    EXPECT_EQ(Scalar::parse(s.to_string()), s);
    EXPECT_EQ(Scalar::parse("(1)/(1+-1*q1^1*q3^1)"), Scalar::quotient(P("1"), P("1-q1*q3")));
}

TEST(FactoredScalar, Expand) {
    FactoredScalar f = FactoredScalar(1, q1()).mul_factor(q3(), 1);
    EXPECT_EQ(expand_factored(f), S("q1-q1*q3"));
    EXPECT_EQ(expand_factored(FactoredScalar::factor(Monomial::qq(1, 1), -1)),
              Scalar::quotient(P("1"), P("1-q1*q3")));
    EXPECT_EQ(expand_factored(FactoredScalar(-1)), Scalar(-1));
}

TEST(FactoredScalar, OrientationKeepsValue) {
    FactoredScalar a = FactoredScalar::factor(q1(-1));
    EXPECT_EQ(expand_factored(a), S("1-q1^-1"));
    EXPECT_EQ(expand_factored(a * a.inverse()), Scalar(1));
}

TEST(Series, PsiVacuumAtInfinity) {
    // (1 - q2 u/z) / (1 - u/z), coefficients of (u/z)^0..2
    Monomial uz = Monomial(Var::u) * Monomial(Var::z, -1);
    FactoredScalar f = FactoredScalar::factor(Monomial::q2() * uz).mul_factor(uz, -1);
    SeriesTrunc s = series_expand(f, Var::z, Direction::at_infinity, 2);
    ASSERT_EQ(s.coeffs.size(), 3u);
    Scalar one_minus_q2 = S("1-q2");
    EXPECT_EQ(s.coeffs[0], Scalar(1));
    EXPECT_EQ(s.coeffs[1], one_minus_q2 * Scalar(Monomial(Var::u)));
    EXPECT_EQ(s.coeffs[2], one_minus_q2 * Scalar(Monomial(Var::u, 2)));
}

TEST(Series, ConstantAtOrderZero) {
    SeriesTrunc s = series_expand(FactoredScalar(1), Var::z, Direction::at_infinity, 0);
    ASSERT_EQ(s.coeffs.size(), 1u);
    EXPECT_EQ(s.coeffs[0], Scalar(1));
}

TEST(Series, AtZero) {
    // q2 (1 - q2^-1 s^-1) / (1 - s^-1), s = u/z, expanded in z
    Monomial zu = Monomial(Var::z) * Monomial(Var::u, -1);
    FactoredScalar f = FactoredScalar(1, Monomial::q2()).mul_factor(Monomial::q2(-1) * zu).mul_factor(zu, -1);
    SeriesTrunc s = series_expand(f, Var::z, Direction::at_zero, 1);
    ASSERT_EQ(s.coeffs.size(), 2u);
    EXPECT_EQ(s.coeffs[0], S("q2"));
    EXPECT_EQ(s.coeffs[1], S("q2-1") * Scalar(Monomial(Var::u, -1)));
}

TEST(Series, SimplePoleResidue) {
    // z/(z-u) = 1/(1-u/z)
    FactoredScalar f = FactoredScalar::factor(Monomial(Var::u) * Monomial(Var::z, -1), -1);
    auto res = delta_residues(f, Var::z);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].support, Monomial(Var::u));
    EXPECT_EQ(res[0].residue, Scalar(1));
    EXPECT_TRUE(delta_residues(FactoredScalar(1), Var::z).empty());
    EXPECT_TRUE(delta_identity_holds(f, Var::z, 6));
}

TEST(Series, DoublePoleThrows) {
    FactoredScalar f = FactoredScalar::factor(Monomial(Var::u) * Monomial(Var::z, -1), -2);
    EXPECT_THROW(delta_residues(f, Var::z), MultiplePoleError);
}

TEST(Series, RandomFunctionsSatisfyDeltaIdentity) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        EXPECT_TRUE(delta_identity_holds(random_pole_function(seed, 4), Var::z, 6)) << seed;
}

TEST(Series, RandomFunctionIsSeeded) {
    EXPECT_EQ(random_pole_function(7, 4), random_pole_function(7, 4));
    EXPECT_FALSE(random_pole_function(7, 4) == random_pole_function(8, 4));
}

TEST(Series, CorruptedResidueBreaksIdentity) {
    FactoredScalar f = random_pole_function(3, 4);
    auto res = delta_residues(f, Var::z);
    ASSERT_FALSE(res.empty());
    auto plus = series_expand(f, Var::z, Direction::at_infinity, 3);
    auto minus = series_expand(f, Var::z, Direction::at_zero, 3);
    Scalar diff = plus.coeffs[0] - minus.coeffs[0];
    Scalar sum;
    for (const auto& r : res) sum += r.residue;
    EXPECT_EQ(diff, sum);
    EXPECT_FALSE(diff == sum + Scalar(1));
}

TEST(Resonance, MapAndGcd) {
    MonomialMap m = resonance_map(1, 2);
    EXPECT_EQ(m.apply(q1()), Monomial(Var::p, 2));
    EXPECT_EQ(m.apply(q3()), Monomial(Var::p, 1));
    EXPECT_THROW(resonance_map(1, 3), UnsupportedResonance);
    EXPECT_NO_THROW(resonance_map(2, 3));
}

TEST(Resonance, ZeroFactorCancellation) {
    int k = 1, r = 2;
    Monomial x = Monomial::qq(1 - r, k + 1);
    FactoredScalar pair = FactoredScalar::factor(x).mul_factor(x, -1);
    EXPECT_EQ(resonance_normalize(pair, k, r), Scalar(1));

    FactoredScalar ratio = FactoredScalar::factor(x.pow(2)).mul_factor(x, -1);
    EXPECT_EQ(resonance_normalize(ratio, k, r), Scalar(2));

    FactoredScalar zero = FactoredScalar::factor(x).mul_factor(q1(), -1);
    EXPECT_TRUE(resonance_normalize(zero, k, r).is_zero());

    FactoredScalar pole = FactoredScalar::factor(x, -1);
    EXPECT_THROW(resonance_normalize(pole, k, r), ResonanceSingular);
}

TEST(Resonance, AgreesWithSubstitutionAwayFromZeros) {
    int k = 2, r = 3;
    FactoredScalar f = FactoredScalar(3, q1()).mul_factor(Monomial::qq(1, 1)).mul_factor(q3(2), -1);
    EXPECT_EQ(resonance_normalize(f, k, r), expand_factored(f).substitute(resonance_map(k, r)));
}
