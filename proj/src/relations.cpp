#include "qgl/relations.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "qgl/engine.hpp"
#include "qgl/errors.hpp"
#include "qgl/field.hpp"

namespace qgl {

const RelationConstants& RelationConstants::get() {
    static const RelationConstants c = [] {
        RelationConstants r;
        Scalar q1(Monomial(Var::q1)), q3(Monomial(Var::q3)), q2(Monomial::q2(1));
        r.sigma1 = q1 + q2 + q3;
        r.sigma2 = q1.inverse() + q2.inverse() + q3.inverse();
        r.g11 = (Scalar(1) - q1) * (Scalar(1) - q2) * (Scalar(1) - q3);
        r.g = {Scalar(1), Scalar(0) - r.sigma1, r.sigma2, Scalar(-1)};
        return r;
    }();
    return c;
}

namespace {

const std::vector<std::pair<RelationId, const char*>>& relation_names() {
    static const std::vector<std::pair<RelationId, const char*>> names = {
        {RelationId::ee, "ee"},           {RelationId::ff, "ff"},
        {RelationId::psie, "psie"},       {RelationId::psif, "psif"},
        {RelationId::ef, "ef"},           {RelationId::serre_e, "serre-e"},
        {RelationId::serre_f, "serre-f"}, {RelationId::level, "level"},
        {RelationId::psi_commute, "psi-commute"},
    };
    return names;
}

std::string label_text(const Label& l) {
    std::string s = "[";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + "]";
}

GeneratorMode E(int m) { return {GenKind::e, m}; }
GeneratorMode Fm(int m) { return {GenKind::f, m}; }
GeneratorMode Psi(bool plus, int m) { return {plus ? GenKind::psi_plus : GenKind::psi_minus, m}; }

/// One (relation, modes, basis vector) instance.
struct Case {
    RelationId rel;
    int a = 0;
    int b = 0;
    bool plus = true;
    /// level: 0 scalar action, 1 central with e_b, 2 central with f_b.
    /// psi-commute: 0 same sign, 1 mixed.
    int sub = 0;
    Label label;

    std::string id() const {
        std::ostringstream os;
        os << relation_name(rel);
        switch (rel) {
        case RelationId::ee:
        case RelationId::ff:
        case RelationId::ef: os << " n=" << a << " m=" << b; break;
        case RelationId::psie:
        case RelationId::psif: os << (plus ? " psi+" : " psi-") << " i=" << a << " j=" << b; break;
        case RelationId::serre_e:
        case RelationId::serre_f: break;
        case RelationId::level:
            os << (plus ? " psi+0" : " psi-0");
            if (sub == 1) os << " central e" << b;
            if (sub == 2) os << " central f" << b;
            break;
        case RelationId::psi_commute: os << " a=" << a << " b=" << b << (sub ? " mixed" : ""); break;
        }
        os << " v=" << label_text(label);
        return os.str();
    }
};

std::vector<Case> make_cases(const CheckSpec& spec, RelationId rel) {
    std::vector<Case> out;
    const int W = spec.mode_window, K = spec.series_order;
    for (const Label& l : spec.basis) {
        auto push = [&](int a, int b, bool plus = true, int sub = 0) { out.push_back({rel, a, b, plus, sub, l}); };
        switch (rel) {
        case RelationId::ee:
        case RelationId::ff:
        case RelationId::ef:
            for (int n = -W; n <= W; ++n)
                for (int m = -W; m <= W; ++m) push(n, m);
            break;
        case RelationId::psie:
        case RelationId::psif:
            for (int j = -W; j <= W; ++j) {
                for (int i = -3; i <= K - 3; ++i) push(i, j, true);
                for (int i = -K; i <= 0; ++i) push(i, j, false);
            }
            break;
        case RelationId::serre_e:
        case RelationId::serre_f: push(0, 0); break;
        case RelationId::level:
            for (bool plus : {true, false}) {
                push(0, 0, plus, 0);
                for (int m = -W; m <= W; ++m) {
                    push(0, m, plus, 1);
                    push(0, m, plus, 2);
                }
            }
            break;
        case RelationId::psi_commute:
            for (int a = 0; a <= W; ++a)
                for (int b = 0; b <= W; ++b) {
                    push(a, b, true, 0);
                    push(-a, -b, false, 0);
                    push(a, -b, true, 1);
                }
            break;
        }
    }
    return out;
}

template <class F>
class Evaluator {
public:
    using Elem = typename F::Elem;
    using Vec = typename Engine<F>::Vec;

    Evaluator(const CheckSpec& spec, F field)
        : eng_(*spec.module, std::move(field), std::max(spec.series_order, 2 * spec.mode_window)) {
        const auto& rc = RelationConstants::get();
        const Module& mod = *spec.module;
        for (int p = 0; p < 4; ++p) g_[p] = eng_.field().scalar(mod.specialize(rc.g[p]));
        g11_ = eng_.field().scalar(mod.specialize(rc.g11));
        auto lv = spec.module->level();
        level_ = {eng_.field().scalar(lv.first), eng_.field().scalar(lv.second)};
    }

    const F& field() const { return eng_.field(); }

    /// Residual vector of a case; zero iff the instance holds.
    Vec residual(const Case& c) {
        const Vec v = eng_.basis(c.label);
        Vec r;
        switch (c.rel) {
        case RelationId::ee:
        case RelationId::ff: {
            Vec lhs = half(c.rel, c.a, c.b, v, true);
            Vec rhs = half(c.rel, c.a, c.b, v, false);
            eng_.axpy(lhs, neg_one(), rhs);
            return lhs;
        }
        case RelationId::psie:
            // g(z,w) psi(z) e(w) + g(w,z) e(w) psi(z)
            for (int p = 0; p < 4; ++p) {
                eng_.axpy(r, g_[p], eng_.chain({Psi(c.plus, c.a + 3 - p), E(c.b + p)}, v));
                eng_.axpy(r, g_[p], eng_.chain({E(c.b + 3 - p), Psi(c.plus, c.a + p)}, v));
            }
            return r;
        case RelationId::psif:
            // g(w,z) psi(z) f(w) + g(z,w) f(w) psi(z)
            for (int p = 0; p < 4; ++p) {
                eng_.axpy(r, g_[p], eng_.chain({Psi(c.plus, c.a + p), Fm(c.b + 3 - p)}, v));
                eng_.axpy(r, g_[p], eng_.chain({Fm(c.b + p), Psi(c.plus, c.a + 3 - p)}, v));
            }
            return r;
        case RelationId::ef: {
            int s = c.a + c.b;
            eng_.axpy(r, g11_, eng_.chain({E(c.a), Fm(c.b)}, v));
            eng_.axpy(r, field().neg(g11_), eng_.chain({Fm(c.b), E(c.a)}, v));
            if (s >= 0) eng_.axpy(r, neg_one(), eng_.apply(Psi(true, s), v));
            if (s <= 0) eng_.axpy(r, field().one(), eng_.apply(Psi(false, s), v));
            return r;
        }
        case RelationId::serre_e:
        case RelationId::serre_f: {
            auto X = c.rel == RelationId::serre_e ? E : Fm;
            eng_.axpy(r, field().one(), eng_.chain({X(0), X(1), X(-1)}, v));
            eng_.axpy(r, neg_one(), eng_.chain({X(0), X(-1), X(1)}, v));
            eng_.axpy(r, neg_one(), eng_.chain({X(1), X(-1), X(0)}, v));
            eng_.axpy(r, field().one(), eng_.chain({X(-1), X(1), X(0)}, v));
            return r;
        }
        case RelationId::level: {
            GeneratorMode p0 = Psi(c.plus, 0);
            if (c.sub == 0) {
                r = eng_.apply(p0, v);
                eng_.axpy(r, field().neg(c.plus ? level_.first : level_.second), v);
                return r;
            }
            GeneratorMode x = c.sub == 1 ? E(c.b) : Fm(c.b);
            r = eng_.chain({p0, x}, v);
            eng_.axpy(r, neg_one(), eng_.chain({x, p0}, v));
            return r;
        }
        case RelationId::psi_commute: {
            GeneratorMode x = Psi(c.plus, c.a);
            GeneratorMode y = Psi(c.sub ? !c.plus : c.plus, c.b);
            r = eng_.chain({x, y}, v);
            eng_.axpy(r, neg_one(), eng_.chain({y, x}, v));
            return r;
        }
        }
        return r;
    }

    /// Swapping the modes turns the right half into minus the left half.
    Vec antisym_residual(const Case& c) {
        const Vec v = eng_.basis(c.label);
        Vec l = half(c.rel, c.b, c.a, v, true);
        eng_.axpy(l, field().one(), half(c.rel, c.a, c.b, v, false));
        return l;
    }

    std::optional<std::string> describe(const Vec& r) const {
        auto l = eng_.first_nonzero(r);
        if (!l) return std::nullopt;
        return "nonzero at " + label_text(*l) + ": " + field().render(r.at(*l));
    }

private:
    Elem neg_one() const { return field().neg(field().one()); }

    /// ee: left = g(z,w)e(z)e(w), right = -g(w,z)e(w)e(z).
    /// ff: left = g(w,z)f(z)f(w), right = -g(z,w)f(w)f(z).
    /// Coefficient of z^{-n} w^{-m}; the right halves use the coefficients of
    /// the swapped polynomial g'_p = g_{3-p}.
    Vec half(RelationId rel, int n, int m, const Vec& v, bool left) {
        Vec r;
        for (int p = 0; p < 4; ++p) {
            if (rel == RelationId::ee) {
                if (left) eng_.axpy(r, g_[p], eng_.chain({E(n + 3 - p), E(m + p)}, v));
                else eng_.axpy(r, field().neg(g_[3 - p]), eng_.chain({E(m + p), E(n + 3 - p)}, v));
            } else {
                if (left) eng_.axpy(r, g_[3 - p], eng_.chain({Fm(n + 3 - p), Fm(m + p)}, v));
                else eng_.axpy(r, field().neg(g_[p]), eng_.chain({Fm(m + p), Fm(n + 3 - p)}, v));
            }
        }
        return r;
    }

    Engine<F> eng_;
    std::array<Elem, 4> g_;
    Elem g11_;
    std::pair<Elem, Elem> level_;
};

struct Worker {
    const CheckSpec& spec;
    bool numeric;
    std::uint64_t seed;
    std::optional<Evaluator<SymbolicField>> sym;
    std::optional<Evaluator<ModularField>> mod;

    Evaluator<SymbolicField>& symbolic() {
        if (!sym) sym.emplace(spec, SymbolicField{});
        return *sym;
    }

    template <class Ev>
    std::optional<std::string> failure(Ev& ev, const Case& c) {
        if (auto d = ev.describe(ev.residual(c))) return d;
        if (spec.antisym && (c.rel == RelationId::ee || c.rel == RelationId::ff))
            if (auto d = ev.describe(ev.antisym_residual(c))) return "antisymmetry: " + *d;
        return std::nullopt;
    }

    CaseResult run(const Case& c) {
        CaseResult out{c.id(), CaseStatus::pass, {}};
        try {
            if (numeric) {
                try {
                    if (!mod) mod.emplace(spec, ModularField(seed));
                    if (!failure(*mod, c)) return out;
                } catch (const DegenerateEvaluation&) {
                }
            }
            if (auto d = failure(symbolic(), c)) {
                out.status = CaseStatus::fail;
                out.detail = *d;
            }
        } catch (const std::exception& e) {
            out.status = CaseStatus::error;
            out.detail = e.what();
        }
        return out;
    }
};

Report run_cases(const CheckSpec& spec, const std::vector<Case>& cases, bool numeric, std::uint64_t seed,
                 unsigned workers) {
    auto t0 = std::chrono::steady_clock::now();
    spec.validate();
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(1, cases.size()));
    std::vector<CaseResult> results(cases.size());
    auto work = [&](unsigned w) {
        Worker wk{spec, numeric, seed, {}, {}};
        for (std::size_t i = w; i < cases.size(); i += workers) results[i] = wk.run(cases[i]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::future<void>> fs;
        for (unsigned w = 0; w < workers; ++w) fs.push_back(std::async(std::launch::async, work, w));
        for (auto& f : fs) f.get();
    }
    Report r;
    r.cases = std::move(results);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Report check_one(const CheckSpec& spec, RelationId rel) {
    Report r = run_cases(spec, make_cases(spec, rel), false, 0, 0);
    r.suite = relation_name(rel);
    return r;
}

}  // namespace

std::string relation_name(RelationId r) {
    for (const auto& [id, name] : relation_names())
        if (id == r) return name;
    return "?";
}

RelationId relation_from_name(const std::string& s) {
    for (const auto& [id, name] : relation_names())
        if (s == name) return id;
    throw InvalidInput("unknown relation: " + s);
}

const std::vector<RelationId>& all_relations() {
    static const std::vector<RelationId> all = [] {
        std::vector<RelationId> v;
        for (const auto& [id, name] : relation_names()) v.push_back(id);
        return v;
    }();
    return all;
}

void CheckSpec::validate() const {
    if (!module) throw InvalidInput("check spec without module");
    if (mode_window < 0) throw InvalidInput("negative mode window");
    if (series_order < mode_window + 3)
        throw InvalidInput("series order " + std::to_string(series_order) + " < mode window + 3");
}

int Report::count(CaseStatus s) const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

void Report::add(std::string id, bool ok, std::string detail) {
    cases.push_back({std::move(id), ok ? CaseStatus::pass : CaseStatus::fail, ok ? std::string() : std::move(detail)});
}

void Report::add_error(std::string id, std::string detail) {
    cases.push_back({std::move(id), CaseStatus::error, std::move(detail)});
}

void Report::merge(const Report& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
    seconds += other.seconds;
}

nlohmann::json Report::to_json() const {
    static const char* names[] = {"pass", "fail", "error"};
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cases) cs.push_back({{"id", c.id}, {"status", names[static_cast<int>(c.status)]}, {"detail", c.detail}});
    return {{"suite", suite},
            {"params", params},
            {"cases", cs},
            {"summary", {{"pass", count(CaseStatus::pass)}, {"fail", count(CaseStatus::fail)}, {"error", count(CaseStatus::error)}}},
            {"seconds", seconds}};
}

std::string Report::summary_line() const {
    std::ostringstream os;
    os << suite << ": " << count(CaseStatus::pass) << " pass, " << count(CaseStatus::fail) << " fail, "
       << count(CaseStatus::error) << " error";
    return os.str();
}

Report check_ee(const CheckSpec& spec) { return check_one(spec, RelationId::ee); }
Report check_ff(const CheckSpec& spec) { return check_one(spec, RelationId::ff); }
Report check_psie(const CheckSpec& spec) { return check_one(spec, RelationId::psie); }
Report check_psif(const CheckSpec& spec) { return check_one(spec, RelationId::psif); }
Report check_ef(const CheckSpec& spec) { return check_one(spec, RelationId::ef); }

Report check_serre(const CheckSpec& spec) {
    Report r = check_one(spec, RelationId::serre_e);
    r.merge(check_one(spec, RelationId::serre_f));
    r.suite = "serre";
    return r;
}

Report check_level_and_central(const CheckSpec& spec) {
    Report r = check_one(spec, RelationId::level);
    r.merge(check_one(spec, RelationId::psi_commute));
    r.suite = "level";
    return r;
}

Report run_suite(const SuiteConfig& config) {
    std::vector<Case> cases;
    for (RelationId rel : config.relations) {
        auto cs = make_cases(config.spec, rel);
        cases.insert(cases.end(), cs.begin(), cs.end());
    }
    Report r = run_cases(config.spec, cases, config.numeric, config.seed, config.workers);
    r.suite = config.name;
    r.params = config.params;
    return r;
}

}  // namespace qgl
