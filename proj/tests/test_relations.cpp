#include <gtest/gtest.h>

#include "qgl/errors.hpp"
#include "qgl/relations.hpp"
#include "qgl/reps.hpp"

using namespace qgl;

namespace {

std::vector<Label> range_labels(int lo, int hi) {
    std::vector<Label> out;
    for (int i = lo; i <= hi; ++i) out.push_back({i});
    return out;
}

std::vector<Label> shape_labels(int max_weight) {
    std::vector<Label> out;
    for (const auto& p : enumerate_nonneg_upto(max_weight)) out.push_back(p.parts());
    return out;
}

/// V(u) with one deliberate defect, for negative controls.
class BrokenVector : public Module {
public:
    enum class Defect { e_scale, psi_shift };
    explicit BrokenVector(Defect d) : base_(make_vector_module()), defect_(d) {}
    std::string family() const override { return "broken"; }
    std::vector<DeltaTerm> e_terms(const Label& l) const override {
        auto ts = base_->e_terms(l);
        if (defect_ == Defect::e_scale)
            for (auto& t : ts) t.coeff = t.coeff.times(2);
        return ts;
    }
    std::vector<DeltaTerm> f_terms(const Label& l) const override { return base_->f_terms(l); }
    FactoredScalar psi_function(const Label& l) const override {
        if (defect_ == Defect::psi_shift) return gamma_fn(l[0] + 1, Monomial(Var::u));
        return base_->psi_function(l);
    }
    std::pair<Scalar, Scalar> level() const override { return base_->level(); }
    bool contains(const Label& l) const override { return base_->contains(l); }

private:
    ModulePtr base_;
    Defect defect_;
};

CheckSpec vector_spec(int window) {
    CheckSpec s;
    s.module = make_vector_module();
    s.basis = range_labels(-2, 2);
    s.mode_window = window;
    s.series_order = window + 3;
    return s;
}

}  // namespace

TEST(Constants, StructureFunction) {
    const auto& c = RelationConstants::get();
    EXPECT_EQ(c.g[0], Scalar(1));
    EXPECT_EQ(c.g[3], Scalar(-1));
    EXPECT_EQ(c.g[1], -c.sigma1);
    EXPECT_EQ(c.g[2], c.sigma2);
    EXPECT_EQ(c.sigma1, Scalar(LaurentPoly::parse("q1+q3+q2")));
    EXPECT_EQ(c.sigma2, Scalar(LaurentPoly::parse("q1^-1+q3^-1+q2^-1")));
}

TEST(Constants, Names) {
    for (auto id : all_relations()) EXPECT_EQ(relation_from_name(relation_name(id)), id);
    EXPECT_THROW(relation_from_name("rel7"), InvalidInput);
}

TEST(CheckSpecTest, SeriesOrderBound) {
    CheckSpec s = vector_spec(2);
    s.series_order = 4;
    EXPECT_THROW(s.validate(), InvalidInput);
}

TEST(Vector, EveryRelationWindowTwo) {
    CheckSpec s = vector_spec(2);
    for (auto* fn : {check_ee, check_ff, check_psie, check_psif, check_ef, check_serre, check_level_and_central}) {
        Report r = fn(s);
        EXPECT_GT(r.cases.size(), 0u);
        EXPECT_TRUE(r.passed()) << r.summary_line();
    }
}

TEST(Fock, EmptyShapeLowestModes) {
    CheckSpec s;
    s.module = make_fock_module();
    s.basis = {Label{}};
    s.mode_window = 0;
    s.series_order = 3;
    EXPECT_TRUE(check_ee(s).passed());
    s.basis = {Label{2}};
    EXPECT_TRUE(check_ff(s).passed());
}

TEST(Fock, SerreSmallShapes) {
    CheckSpec s;
    s.module = make_fock_module();
    s.basis = shape_labels(4);
    s.mode_window = 1;
    s.series_order = 4;
    EXPECT_TRUE(check_serre(s).passed());
}

TEST(WN, AntisymmetryOnSmallWindow) {
    CheckSpec s;
    s.module = make_wn_module(2);
    s.basis = {Label{1, 0}, Label{0, 0}, Label{1, 1}};
    s.mode_window = 1;
    s.series_order = 6;
    s.antisym = true;
    Report r = check_ee(s);
    EXPECT_TRUE(r.passed()) << r.summary_line();
}

TEST(Levels, PerFamily) {
    CheckSpec s = vector_spec(1);
    EXPECT_TRUE(check_level_and_central(s).passed());
    s.module = make_fock_module();
    s.basis = shape_labels(3);
    EXPECT_TRUE(check_level_and_central(s).passed());
}

TEST(NegativeControl, ScaledEBreaksEf) {
    CheckSpec s = vector_spec(1);
    s.module = std::make_shared<BrokenVector>(BrokenVector::Defect::e_scale);
    EXPECT_FALSE(check_ef(s).passed());
    EXPECT_TRUE(check_ee(s).passed());
}

TEST(NegativeControl, ShiftedPsiBreaksPsiE) {
    CheckSpec s = vector_spec(1);
    s.module = std::make_shared<BrokenVector>(BrokenVector::Defect::psi_shift);
    EXPECT_FALSE(check_psie(s).passed());
    EXPECT_FALSE(check_psif(s).passed());
}

TEST(Suite, NumericPrescreenAgreesWithExact) {
    SuiteConfig c;
    c.name = "vector";
    c.spec = vector_spec(1);
    c.workers = 2;
    Report exact = run_suite(c);
    c.numeric = true;
    c.seed = 42;
    Report fast = run_suite(c);
    EXPECT_TRUE(exact.passed());
    EXPECT_TRUE(fast.passed());
    EXPECT_EQ(exact.cases.size(), fast.cases.size());

    c.spec.module = std::make_shared<BrokenVector>(BrokenVector::Defect::e_scale);
    Report bad_exact = run_suite(c);
    c.numeric = false;
    Report bad_fast = run_suite(c);
    EXPECT_EQ(bad_exact.count(CaseStatus::fail), bad_fast.count(CaseStatus::fail));
    EXPECT_GT(bad_exact.count(CaseStatus::fail), 0);
}

TEST(Suite, DeterministicAcrossWorkerCounts) {
    SuiteConfig c;
    c.name = "vector";
    c.spec = vector_spec(1);
    c.workers = 1;
    auto a = run_suite(c).to_json();
    c.workers = 3;
    auto b = run_suite(c).to_json();
    a.erase("seconds");
    b.erase("seconds");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(ReportTest, JsonSchema) {
    Report r;
    r.suite = "demo";
    r.add("ok case", true);
    r.add("bad case", false, "residual 1");
    r.add_error("odd case", "boom");
    auto j = r.to_json();
    EXPECT_EQ(j["suite"], "demo");
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_EQ(j["summary"]["fail"], 1);
    EXPECT_EQ(j["summary"]["error"], 1);
    EXPECT_EQ(j["cases"].size(), 3u);
    EXPECT_EQ(j["cases"][1]["status"], "fail");
    EXPECT_FALSE(r.passed());
}
