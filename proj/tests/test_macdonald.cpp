#include <gtest/gtest.h>

#include "qgl/errors.hpp"
#include "qgl/macdonald.hpp"

using namespace qgl;

namespace {

Scalar S(const std::string& s) { return Scalar(LaurentPoly::parse(s)); }
Scalar prod(std::initializer_list<const char*> fs) {
    Scalar s(1);
    for (const char* f : fs) s *= S(f);
    return s;
}
using Shape = std::vector<int>;

}  // namespace

TEST(Eigenvalue, Formula) {
    EXPECT_EQ(d1_eigenvalue({1, 0}, 2, 1), S("q*t+1"));
    EXPECT_EQ(d1_eigenvalue({2, 1}, 2, 1), S("q^2*t+q"));
    EXPECT_EQ(d1_eigenvalue({0, 0, 0}, 3, 1), S("t^2+t+1"));
    EXPECT_EQ(d1_eigenvalue({1, 0}, 2, -1), S("q^-1*t^-1+1"));
}

TEST(OperatorD, OnConstant) {
    SymFunc one(3);
    one.add(Shape{0, 0, 0}, Scalar(1));
    SymFunc d = apply_macdonald_D(one, 1);
    ASSERT_EQ(d.terms.size(), 1u);
    EXPECT_EQ(d.coefficient({0, 0, 0}), S("t^2+t+1"));
}

TEST(OperatorD, EigenvectorsBothSigns) {
    for (const auto& lam : {Shape{1, 0}, Shape{2, 0}, Shape{2, 1}, Shape{3, 1}})
        for (int sign : {1, -1}) {
            SymFunc p = macdonald_P(lam, 2);
            SymFunc expect(2);
            expect.add(p, d1_eigenvalue(lam, 2, sign));
            EXPECT_TRUE(apply_macdonald_D(p, sign) == expect);
        }
}

TEST(PolynomialP, TwoRows) {
    SymFunc p = macdonald_P({2, 0}, 2);
    EXPECT_EQ(p.coefficient({2, 0}), Scalar(1));
    EXPECT_EQ(p.coefficient({1, 1}), prod({"1+q", "1-t"}) / S("1-q*t"));
    EXPECT_EQ(p.terms.size(), 2u);
}

TEST(PolynomialP, ThreeVariables) {
    SymFunc p = macdonald_P({2, 1, 0}, 3);
    EXPECT_EQ(p.coefficient({2, 1, 0}), Scalar(1));
    EXPECT_EQ(p.coefficient({1, 1, 1}), prod({"1-t", "2+q+t+2*q*t"}) / S("1-q*t^2"));
}

TEST(PolynomialP, SchurAtQEqualsT) {
    // P at q = t is the Schur polynomial: s_(2,1,0) = m_(2,1,0) + 2 m_(1,1,1)
    SymFunc p = macdonald_P({2, 1, 0}, 3);
    MonomialMap qt;
    qt.set(Var::q, Monomial(Var::t));
    EXPECT_EQ(p.coefficient({1, 1, 1}).substitute(qt), Scalar(2));
}

TEST(PolynomialP, LaurentShift) {
    SymFunc p = macdonald_P_laurent({0, -1}, 2);
    SymFunc base = macdonald_P({1, 0}, 2);
    EXPECT_EQ(p.terms.size(), base.terms.size());
    EXPECT_EQ(p.coefficient({0, -1}), base.coefficient({1, 0}));
    SymFunc inv = macdonald_P_laurent({-1, -1}, 2);
    ASSERT_EQ(inv.terms.size(), 1u);
    EXPECT_EQ(inv.coefficient({-1, -1}), Scalar(1));
    EXPECT_TRUE(macdonald_P_laurent({2, 1}, 2) == macdonald_P({2, 1}, 2));
}

TEST(Pieri, Examples) {
    auto a = pieri_e1({0, 0}, 2);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.at({1, 0}), Scalar(1));

    auto b = pieri_e1({1, 0}, 2);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b.at({2, 0}), Scalar(1));
    EXPECT_EQ(b.at({1, 1}), prod({"1+t", "1-q"}) / S("1-q*t"));
}

TEST(Pieri, InverseVariablesLowerShapes) {
    auto a = pieri_e1({1, 0}, 2, -1);
    for (const auto& [shape, c] : a) {
        EXPECT_EQ(shape[0] + shape[1], 0);
        EXPECT_FALSE(c.is_zero());
    }
    EXPECT_EQ(a.at({1, -1}), Scalar(1));
}

TEST(Basis, RoundTrip) {
    SymFunc f(2);
    f.add(macdonald_P({2, 0}, 2), S("q"));
    f.add(macdonald_P({1, 1}, 2), S("1-t"));
    auto coeffs = to_p_basis(f);
    ASSERT_EQ(coeffs.size(), 2u);
    EXPECT_EQ(coeffs.at({2, 0}), S("q"));
    EXPECT_EQ(coeffs.at({1, 1}), S("1-t"));
}

TEST(Wheel, Examples) {
    EXPECT_TRUE(wheel_vanishes(macdonald_P({2, 0}, 2), 1, 2));
    EXPECT_FALSE(wheel_vanishes(macdonald_P({1, 0}, 2), 1, 2));
    EXPECT_TRUE(wheel_vanishes(SymFunc(2), 1, 2));
    EXPECT_TRUE(wheel_vanishes(macdonald_P({3, 1}, 2), 1, 2));
    EXPECT_FALSE(wheel_vanishes(macdonald_P({2, 1}, 2), 1, 2));
}

TEST(Wheel, ThreeVariables) {
    EXPECT_TRUE(wheel_vanishes(macdonald_P({3, 0, 0}, 3), 2, 3));
    EXPECT_FALSE(wheel_vanishes(macdonald_P({2, 0, 0}, 3), 2, 3));
}

TEST(SymFuncTest, Json) {
    auto j = macdonald_P({2, 0}, 2).to_json();
    EXPECT_EQ(j["N"], 2);
    EXPECT_EQ(j["basis"], "m");
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["shape"], nlohmann::json({2, 0}));
    EXPECT_EQ(j["terms"][0]["coeff"], "(1)/(1)");
}
