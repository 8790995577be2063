#include <gtest/gtest.h>

#include "qgl/errors.hpp"
#include "qgl/reps.hpp"
#include "qgl/resonance.hpp"

using namespace qgl;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }
Scalar Q(const std::string& num, const std::string& den) { return Scalar::quotient(P(num), P(den)); }
Scalar prod(std::initializer_list<const char*> fs) {
    Scalar s(1);
    for (const char* f : fs) s *= Scalar(P(f));
    return s;
}
const Monomial U(Var::u);

GeneratorMode E(int m) { return {GenKind::e, m}; }
GeneratorMode F(int m) { return {GenKind::f, m}; }
GeneratorMode Pp(int m) { return {GenKind::psi_plus, m}; }
GeneratorMode Pm(int m) { return {GenKind::psi_minus, m}; }

Scalar coeff(const StateVector& v, const Label& l) {
    auto it = v.find(l);
    return it == v.end() ? Scalar() : it->second;
}

Scalar at(const FactoredScalar& f, const Monomial& z) { return expand_factored(evaluate_at(f, Var::z, z)); }

}  // namespace

TEST(GeneratorModeTest, SignRule) {
    EXPECT_THROW(Pp(-1).validate(), InvalidInput);
    EXPECT_THROW(Pm(1).validate(), InvalidInput);
    EXPECT_NO_THROW(Pp(0).validate());
    EXPECT_NO_THROW(Pm(0).validate());
}

TEST(Gamma, FourFactors) {
    Monomial s = U * Monomial(Var::z, -1);
    FactoredScalar expect = FactoredScalar::factor(Monomial(Var::q3) * s)
                                .mul_factor(Monomial::qq(-1, -1) * s)
                                .mul_factor(Monomial::qq(-1, 0) * s, -1)
                                .mul_factor(s, -1);
    EXPECT_EQ(expand_factored(gamma_fn(0, U)), expand_factored(expect));
}

TEST(Gamma, PoleAtOwnSupport) {
    EXPECT_THROW(expand_factored(evaluate_at(gamma_fn(2, U), Var::z, Monomial::qq(2, 0) * U)), DivisionByZero);
}

TEST(Gamma, ResiduesMatchSeriesDifference) {
    FactoredScalar g = gamma_fn(0, U);
    auto res = delta_residues(g, Var::z);
    ASSERT_EQ(res.size(), 2u);
    std::vector<Monomial> supports{res[0].support, res[1].support};
    std::sort(supports.begin(), supports.end());
    std::vector<Monomial> expect{U, Monomial::qq(-1, 0) * U};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(supports, expect);
    EXPECT_TRUE(delta_identity_holds(g, Var::z, 6));
}

TEST(Gamma, ShiftIdentity) {
    Monomial us(Var::u1), ut(Var::u2);
    Monomial q1inv = Monomial::qq(-1, 0);
    Scalar lhs = at(gamma_fn(0, ut), q1inv * us) * at(gamma_fn(-1, us), ut);
    Scalar rhs = at(gamma_fn(0, us), ut) * at(gamma_fn(1, ut), q1inv * us);
    EXPECT_EQ(lhs, rhs);
}

TEST(Vector, Actions) {
    EXPECT_EQ(coeff(vector_apply(E(0), 0), {1}), Q("1", "1-q1"));
    EXPECT_EQ(coeff(vector_apply(F(0), 0), {-1}), -Q("1", "1-q1^-1"));
    EXPECT_EQ(coeff(vector_apply(E(2), 1), {2}), Q("q1^2*u^2", "1-q1"));
    EXPECT_EQ(coeff(vector_apply(F(1), 1), {0}), -Q("u", "1-q1^-1"));
    for (int i = -2; i <= 2; ++i) {
        EXPECT_EQ(coeff(vector_apply(Pp(0), i), {i}), Scalar(1));
        EXPECT_EQ(coeff(vector_apply(Pm(0), i), {i}), Scalar(1));
    }
}

TEST(Tensor, OneFactorIsVector) {
    std::vector<Monomial> us{U};
    for (int a = -2; a <= 2; ++a)
        for (auto g : {E(1), F(-1), Pp(2), Pm(-1)})
            EXPECT_TRUE(state_equal(tensor_apply(g, {a}, us), vector_apply(g, a)));
}

TEST(Tensor, FirstFactorHasNoGamma) {
    std::vector<Monomial> us{Monomial(Var::u1), Monomial(Var::u2)};
    auto v = tensor_apply(E(0), {0, 0}, us);
    EXPECT_EQ(coeff(v, {1, 0}), Q("1", "1-q1"));
    EXPECT_EQ(coeff(v, {0, 1}), Q("1", "1-q1") * at(gamma_fn(0, us[0]), us[1]));
}

TEST(Tensor, PoleCollision) {
    std::vector<Monomial> us{Monomial(Var::u1), Monomial::qq(1, 0) * Monomial(Var::u1)};
    EXPECT_THROW(tensor_apply(E(0), {0, 0}, us), PoleCollision);
}

TEST(WN, WeakDecreaseByVanishing) {
    auto v = wn_apply(E(0), Partition::zvalued({0, 0}));
    EXPECT_EQ(v.count({0, 1}), 0u);
    EXPECT_EQ(v.size(), 1u);
}

TEST(WN, PieriCoefficient) {
    auto v = wn_apply(E(0), Partition::zvalued({1, 0}), Monomial());
    Scalar got = coeff(v, {1, 1}) * Scalar(P("1-q1"));
    Scalar expect = prod({"1-q1^-1", "1-q3^2"}) / prod({"1-q1^-1*q3", "1-q3"});
    EXPECT_EQ(got, expect);
    // (1+t)(1-q)/(1-qt) with q = q1, t = q3^-1
    EXPECT_EQ(got, prod({"1+q3^-1", "1-q1"}) / Scalar(P("1-q1*q3^-1")));
}

TEST(WN, PsiPlusOneEigenvalue) {
    const int n = 3;
    std::vector<int> lam{2, 0, -1};
    auto v = wn_apply(Pp(1), Partition::zvalued(lam));
    Scalar sum;
    for (int i = 1; i <= n; ++i) sum += Scalar(Monomial::qq(lam[i - 1], i - n));
    Scalar expect = Scalar(Monomial::qq(0, n - 1)) * prod({"1-q2", "1-q3"}) * sum * Scalar(U);
    EXPECT_EQ(coeff(v, lam), expect);
}

TEST(WN, LevelOneOne) {
    auto mod = make_wn_module(2);
    EXPECT_EQ(mod->level(), (std::pair<Scalar, Scalar>{Scalar(1), Scalar(1)}));
}

TEST(WNModified, EUnchangedAndPsiZero) {
    for (const auto& lam : {std::vector<int>{1, 0}, std::vector<int>{2, 1, 0}}) {
        auto p = Partition::zvalued(lam);
        EXPECT_TRUE(state_equal(wn_modified_apply(E(1), p), wn_apply(E(1), p)));
        EXPECT_EQ(coeff(wn_modified_apply(Pp(0), p), lam), Scalar(1));
    }
}

TEST(WNModified, TruncationStability) {
    EXPECT_EQ(wn_truncation_stability({1, 0}), "");
    EXPECT_EQ(wn_truncation_stability({2, 1, 0}), "");
    EXPECT_THROW(wn_truncation_stability({1, 1}), InvalidInput);
}

TEST(Fock, Level) {
    auto mod = make_fock_module();
    EXPECT_EQ(mod->level(), (std::pair<Scalar, Scalar>{Scalar(1), Scalar(Monomial::q2())}));
    for (const auto& lam : {std::vector<int>{}, std::vector<int>{2, 1}}) {
        auto p = Partition::nonneg(lam);
        EXPECT_EQ(coeff(fock_apply(Pp(0), p), lam), Scalar(1));
        EXPECT_EQ(coeff(fock_apply(Pm(0), p), lam), Scalar(Monomial::q2()));
    }
}

TEST(Fock, VacuumEigenSeries) {
    auto vac = Partition::nonneg({});
    // (1 - q2 u/z)/(1 - u/z) = 1 + (1-q2) sum_m u^m z^-m
    for (int m = 1; m <= 3; ++m)
        EXPECT_EQ(coeff(fock_apply(Pp(m), vac), {}), Scalar(P("1-q2")) * Scalar(Monomial(Var::u, m)));
    // q2 (1 - q2^-1 z/u)/(1 - z/u) = q2 + (q2-1) sum_m u^-m z^m
    for (int m = 1; m <= 3; ++m)
        EXPECT_EQ(coeff(fock_apply(Pm(-m), vac), {}), Scalar(P("q2-1")) * Scalar(Monomial(Var::u, -m)));
}

TEST(Fock, EmptyShapeCreation) {
    for (int m = -2; m <= 2; ++m) {
        auto v = fock_apply(E(m), Partition::nonneg({}));
        ASSERT_EQ(v.size(), 1u);
        EXPECT_EQ(coeff(v, {1}), Q("1", "1-q1") * Scalar(Monomial(Var::u, m)));
    }
}

TEST(Fock, NeverLeavesPartitions) {
    for (const auto& p : enumerate_nonneg_upto(5))
        for (auto g : {E(0), F(0)})
            for (const auto& [l, c] : fock_apply(g, p)) {
                EXPECT_TRUE(std::is_sorted(l.rbegin(), l.rend()));
                EXPECT_TRUE(l.empty() || l.back() > 0);
                int w = 0;
                for (int x : l) w += x;
                EXPECT_EQ(w, p.weight() + (g.kind == GenKind::e ? 1 : -1));
            }
}

TEST(Fock, FactorizedForms) {
    for (const auto& lam : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{2, 1}})
        EXPECT_TRUE(fock_factorized_check(Partition::nonneg(lam)));
}

TEST(Resonance, LevelIsPMonomial) {
    for (auto [k, r] : {std::pair{1, 2}, std::pair{2, 3}}) {
        TailSpec t{k, r, std::vector<int>(k - 1, 0)};
        auto mod = make_resonance_module(t);
        EXPECT_EQ(mod->level().first, Scalar(1));
        EXPECT_EQ(mod->level().second, Scalar(Monomial(Var::p, k * (r - 1))));
    }
}

TEST(Resonance, VacuumCreationIsFinite) {
    TailSpec t{1, 2, {}};
    auto vac = Partition::tailed({}, t);
    auto v = resonance_apply(E(0), vac);
    ASSERT_FALSE(v.empty());
    for (const auto& [l, c] : v) {
        EXPECT_FALSE(c.is_zero());
        EXPECT_FALSE(c.num().involves(Var::q1));
        EXPECT_FALSE(c.num().involves(Var::q3));
    }
}

TEST(Resonance, BoundaryVanishing) {
    // lambda0 for (1,2) has lambda_1 - lambda_2 = 2: no box may go to row 2
    TailSpec t{1, 2, {}};
    auto v = resonance_apply(E(0), Partition::tailed({}, t));
    for (const auto& [l, c] : v) EXPECT_EQ(l.at(0), 1) << "only row 1 may grow";
    // (2,1) with (k,r)=(2,3) and c=(1): lambda_1 - lambda_3 = 3 blocks row 3
    TailSpec t2{2, 3, {1}};
    auto lam = Partition::tailed({}, t2);
    ASSERT_EQ(lam.at(1) - lam.at(3), 3);
    auto w = resonance_apply(E(0), lam);
    for (const auto& [l, c] : w) EXPECT_NE(l.size() >= 3 ? l[2] : tail_value(t2, 3), tail_value(t2, 3) + 1);
}
