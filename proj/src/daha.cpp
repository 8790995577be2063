#include "qgl/daha.hpp"

#include <chrono>
#include <sstream>

#include "qgl/engine.hpp"
#include "qgl/errors.hpp"
#include "qgl/field.hpp"
#include "qgl/macdonald.hpp"
#include "qgl/partition.hpp"

namespace qgl {

namespace {

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string shape_text(const std::vector<int>& l) { return Partition::zvalued(l).to_string(); }

/// Both maps must agree on the union of their keys.
std::string compare(const std::map<std::vector<int>, Scalar>& lhs, const std::map<std::vector<int>, Scalar>& rhs) {
    std::map<std::vector<int>, std::pair<Scalar, Scalar>> all;
    for (const auto& [k, v] : lhs) all[k].first = v;
    for (const auto& [k, v] : rhs) all[k].second = v;
    for (const auto& [k, v] : all)
        if (!(v.first == v.second))
            return "at " + shape_text(k) + ": module " + v.first.to_string() + " vs oracle " + v.second.to_string();
    return {};
}

std::map<std::vector<int>, Scalar> bridged(const std::map<std::vector<int>, Scalar>& m) {
    std::map<std::vector<int>, Scalar> out;
    MonomialMap b = macdonald_bridge();
    for (const auto& [k, v] : m) out.emplace(k, v.substitute(b));
    return out;
}

std::map<std::vector<int>, Scalar> scaled(const StateVector& v, const Scalar& c) {
    std::map<std::vector<int>, Scalar> out;
    for (const auto& [k, x] : v) out.emplace(k, x * c);
    return out;
}

}  // namespace

Report check_identification(int n, int max_weight) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "identification";
    rep.params = {{"N", n}, {"max_weight", max_weight}};
    ModulePtr wn = make_wn_module(n, Monomial());
    const Scalar q1(Monomial(Var::q1)), q3(Monomial(Var::q3)), q2(Monomial::q2());
    const Scalar one(1);
    const Scalar e_pref = one - q1;
    const Scalar f_pref = q1.inverse() - one;
    const Scalar psi_plus_pref = Scalar(Monomial(Var::q3, n - 1)) * (one - q2) * (one - q3);
    const Scalar psi_minus_pref = Scalar(Monomial(Var::q3, 1 - n)) * (one - q2.inverse()) * (one - q3.inverse());
    MonomialMap bridge = macdonald_bridge();
    for (const auto& p : enumerate_nonneg_upto(max_weight)) {
        if (p.length() > n) continue;
        std::vector<int> lam = p.parts();
        lam.resize(static_cast<std::size_t>(n), 0);
        std::string at = " N=" + std::to_string(n) + " v=" + shape_text(lam);
        auto run = [&](const std::string& id, auto&& body) {
            try {
                std::string d = body();
                rep.add(id + at, d.empty(), d);
            } catch (const std::exception& e) {
                rep.add_error(id + at, e.what());
            }
        };
        run("e0", [&] {
            return compare(scaled(apply(*wn, {GenKind::e, 0}, lam), e_pref), bridged(pieri_e1(lam, n, 1)));
        });
        run("f0", [&] {
            return compare(scaled(apply(*wn, {GenKind::f, 0}, lam), f_pref), bridged(pieri_e1(lam, n, -1)));
        });
        run("psi+1", [&] {
            std::map<std::vector<int>, Scalar> oracle{{lam, psi_plus_pref * d1_eigenvalue(lam, n, 1).substitute(bridge)}};
            return compare(scaled(apply(*wn, {GenKind::psi_plus, 1}, lam), one), oracle);
        });
        run("psi-1", [&] {
            std::map<std::vector<int>, Scalar> oracle{{lam, psi_minus_pref * d1_eigenvalue(lam, n, -1).substitute(bridge)}};
            return compare(scaled(apply(*wn, {GenKind::psi_minus, -1}, lam), one), oracle);
        });
    }
    rep.seconds = elapsed(t0);
    return rep;
}

Report check_mode_recursion(const ModulePtr& mod, const std::vector<Label>& basis, int window) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "mode-recursion";
    rep.params = {{"module", mod->family()}, {"window", window}};
    using Vec = Engine<SymbolicField>::Vec;
    Engine<SymbolicField> eng(*mod, SymbolicField{}, 3);
    const SymbolicField& F = eng.field();
    const auto& rc = RelationConstants::get();
    auto [cp, cm] = mod->level();
    Scalar gap = mod->specialize(rc.sigma1 - rc.sigma2);
    // coefficient k in [psi, x_m] = k x_{m +- 1}
    struct Rule {
        GenKind x;
        bool plus;
        Scalar k;
    };
    const std::vector<Rule> rules = {
        {GenKind::e, true, cp * gap},
        {GenKind::e, false, -(cm * gap)},
        {GenKind::f, true, -(cp * gap)},
        {GenKind::f, false, cm * gap},
    };
    auto minus = [&](Vec a, const Vec& b) {
        eng.axpy(a, F.neg(F.one()), b);
        return a;
    };
    for (const Label& v : basis) {
        std::string at = " v=" + shape_text(v);
        Vec bv = eng.basis(v);
        for (const auto& rule : rules) {
            GeneratorMode psi{rule.plus ? GenKind::psi_plus : GenKind::psi_minus, rule.plus ? 1 : -1};
            std::string name = std::string(rule.x == GenKind::e ? "e" : "f") + (rule.plus ? " psi+1" : " psi-1");
            for (int m = -window; m <= window; ++m) {
                std::string id = name + " m=" + std::to_string(m) + at;
                try {
                    GeneratorMode xm{rule.x, m}, xn{rule.x, rule.plus ? m + 1 : m - 1};
                    Vec r = minus(eng.chain({psi, xm}, bv), eng.chain({xm, psi}, bv));
                    eng.axpy(r, F.neg(F.scalar(rule.k)), eng.apply(xn, bv));
                    auto bad = eng.first_nonzero(r);
                    rep.add(id, !bad, bad ? "nonzero at " + shape_text(*bad) : "");
                } catch (const std::exception& e) {
                    rep.add_error(id, e.what());
                }
            }
            // x_m rebuilt from x_0 through repeated commutators, on basis vectors
            std::string id = name + " rebuild" + at;
            try {
                Vec cur = eng.apply({rule.x, 0}, bv);
                auto eig = eng.psi_value(rule.plus, rule.plus ? 1 : -1, v);
                Scalar inv = rule.k.inverse();
                std::string detail;
                for (int s = 1; s <= window && detail.empty(); ++s) {
                    Vec next = eng.apply(psi, cur);
                    eng.axpy(next, F.neg(eig), cur);
                    Vec rebuilt;
                    eng.axpy(rebuilt, F.scalar(inv), next);
                    int m = rule.plus ? s : -s;
                    if (eng.first_nonzero(minus(rebuilt, eng.apply({rule.x, m}, bv))))
                        detail = "mismatch at m=" + std::to_string(m);
                    cur = std::move(rebuilt);
                }
                rep.add(id, detail.empty(), detail);
            } catch (const std::exception& e) {
                rep.add_error(id, e.what());
            }
        }
    }
    rep.seconds = elapsed(t0);
    return rep;
}

namespace {

/// The product formula for any finite integer sequence.
FactoredScalar c_ratio_formal(const std::vector<int>& lambda, int i) {
    int len = static_cast<int>(lambda.size());
    if (i < 1) throw InvalidInput("row index must be >= 1");
    auto lam = [&](int j) { return j <= len ? lambda[static_cast<std::size_t>(j - 1)] : 0; };
    FactoredScalar d = FactoredScalar::factor(Monomial::qq(1, 1));
    auto tail = [&](int j) {
        FactoredScalar f = FactoredScalar::factor(Monomial::qq(lam(j + 1) - lam(i), j - i + 1));
        f.mul_factor(Monomial::qq(lam(j) - lam(i), j - i + 1), -1);
        return f;
    };
    int last = std::max(len, i);
    for (int j = i; j <= last; ++j) d *= tail(j);
    if (!(tail(last + 1) == FactoredScalar())) throw QglError("c ratio: tail factor is not 1");
    for (int j = 1; j < i; ++j) {
        d.mul_factor(Monomial::qq(lam(j) - lam(i) - 1, j - i - 1));
        d.mul_factor(Monomial::qq(lam(j) - lam(i) - 1, j - i), -1);
    }
    return d;
}

}  // namespace

FactoredScalar c_ratio(const std::vector<int>& lambda, int i) {
    int len = static_cast<int>(lambda.size());
    if (i < 1) throw InvalidInput("row index must be >= 1");
    auto lam = [&](int j) { return j <= len ? lambda[static_cast<std::size_t>(j - 1)] : 0; };
    if (i > 1 && lam(i - 1) < lam(i) + 1) throw InvalidInput("lambda + 1_i is not a partition");
    return c_ratio_formal(lambda, i);
}

bool cocycle_check(const std::vector<int>& lambda, int i, int k) {
    auto plus = [&](int row) {
        std::vector<int> l = lambda;
        if (static_cast<int>(l.size()) < row) l.resize(static_cast<std::size_t>(row), 0);
        l[static_cast<std::size_t>(row - 1)] += 1;
        return l;
    };
    Scalar a = Scalar::from_factored(c_ratio_formal(plus(i), k) * c_ratio_formal(lambda, i));
    Scalar b = Scalar::from_factored(c_ratio_formal(plus(k), i) * c_ratio_formal(lambda, k));
    return a == b;
}

Report check_cocycles(int max_weight) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "cocycle";
    rep.params = {{"max_weight", max_weight}};
    {
        Scalar d = Scalar::from_factored(c_ratio({}, 1));
        Scalar want = Scalar(1) - Scalar(Monomial::qq(1, 1));
        rep.add("normalization c(1)/c()", d == want, d.to_string());
    }
    for (const auto& p : enumerate_nonneg_upto(max_weight)) {
        const std::vector<int>& l = p.parts();
        int len = p.length();
        for (int i = 1; i <= len + 1; ++i)
            for (int k = i + 1; k <= len + 2; ++k) {
                std::ostringstream id;
                id << "cocycle v=" << p.to_string() << " i=" << i << " k=" << k;
                try {
                    rep.add(id.str(), cocycle_check(l, i, k), "two paths differ");
                } catch (const std::exception& e) {
                    rep.add_error(id.str(), e.what());
                }
            }
    }
    rep.seconds = elapsed(t0);
    return rep;
}

}  // namespace qgl
