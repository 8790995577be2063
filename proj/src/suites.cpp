#include "qgl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "qgl/daha.hpp"
#include "qgl/errors.hpp"
#include "qgl/macdonald.hpp"
#include "qgl/reps.hpp"
#include "qgl/resonance.hpp"
#include "qgl/series.hpp"

namespace qgl {

namespace {

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string label_text(const Label& l) { return Partition::zvalued(l).to_string(); }

template <class Fn>
void run_case(Report& rep, const std::string& id, Fn&& body) {
    try {
        std::string detail = body();
        rep.add(id, detail.empty(), detail);
    } catch (const std::exception& e) {
        rep.add_error(id, e.what());
    }
}

/// All integer vectors of length n with entries in [lo, hi]; weakly
/// decreasing ones only when `decreasing`.
std::vector<Label> box(int n, int lo, int hi, bool decreasing) {
    std::vector<Label> out;
    Label cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        int top = decreasing && !cur.empty() ? std::min(hi, cur.back()) : hi;
        for (int v = top; v >= lo; --v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

void add_fock_extras(Report& rep, const std::vector<Label>& basis) {
    for (const Label& l : basis)
        run_case(rep, "factorized v=" + label_text(l), [&] {
            return fock_factorized_check(Partition::nonneg(l)) ? std::string() : std::string("product and ratio forms differ");
        });
    for (int n = 3; n <= 5; ++n)
        for (const Label& l : basis) {
            if (static_cast<int>(l.size()) >= n) continue;
            Label padded = l;
            padded.resize(static_cast<std::size_t>(n), 0);
            run_case(rep, "truncation N=" + std::to_string(n) + " v=" + label_text(l), [&] { return wn_truncation_stability(padded); });
        }
}

void add_resonance_extras(Report& rep, const TailSpec& tail, const ModulePtr& mod, const std::vector<Label>& basis) {
    const int k = tail.k;
    auto full = [&](const Label& l, int upto) {
        Label t = l;
        while (static_cast<int>(t.size()) < upto) t.push_back(tail_value(tail, static_cast<int>(t.size()) + 1));
        return t;
    };
    auto trim = [&](Label t) {
        while (!t.empty() && t.back() == tail_value(tail, static_cast<int>(t.size()))) t.pop_back();
        return t;
    };
    for (const Label& l : basis) {
        const std::string at = " v=" + label_text(l);
        run_case(rep, "closure" + at, [&] {
            for (const auto& terms : {mod->e_terms(l), mod->f_terms(l)})
                for (const auto& t : terms)
                    if (!mod->contains(t.target)) return "target " + label_text(t.target) + " is not admissible";
            return std::string();
        });
        run_case(rep, "boundary" + at, [&] {
            int len = static_cast<int>(l.size());
            Label f = full(l, len + 2 * k + 2);
            auto e = mod->e_terms(l);
            for (int i = 1; i <= len + 1; ++i) {
                if (f[static_cast<std::size_t>(i - 1)] - f[static_cast<std::size_t>(i + k - 1)] != tail.r) continue;
                Label t = f;
                t[static_cast<std::size_t>(i + k - 1)] += 1;
                t = trim(t);
                for (const auto& term : e)
                    if (term.target == t) return "nonzero e coefficient into row " + std::to_string(i + k);
            }
            return std::string();
        });
        run_case(rep, "truncation" + at, [&] {
            Label t = full(l, static_cast<int>(l.size()) + k);
            return resonance_truncation_stability(tail, t);
        });
    }
}

}  // namespace

void VerifyOptions::resolve() {
    auto set = [](int& v, int d) {
        if (v < 0) v = d;
    };
    bool entries_unset = entry_window.first > entry_window.second;
    if (module == "vector") {
        set(mode_window, 3);
        if (entries_unset) entry_window = {-3, 3};
    } else if (module == "tensor") {
        set(n, 2);
        set(mode_window, 3);
        if (entries_unset) entry_window = {-2, 2};
        if (n < 1 || n > kMaxU) throw InvalidInput("tensor needs 1 <= N <= 4");
    } else if (module == "wn") {
        set(n, 2);
        set(mode_window, 2);
        if (entries_unset) entry_window = {-2, 3};
        if (n < 1) throw InvalidInput("W^N needs N >= 1");
    } else if (module == "fock") {
        set(max_weight, 6);
        set(mode_window, 3);
    } else if (module == "resonance") {
        set(max_weight, 5);
        set(mode_window, 2);
        tail.validate();
        resonance_map(tail.k, tail.r);
    } else {
        throw InvalidInput("unknown module family: " + module);
    }
    set(series_order, mode_window + 3);
    if (series_order < mode_window + 3) throw InvalidInput("series order must be at least mode window + 3");
    bool uses_entries = module == "vector" || module == "tensor" || module == "wn";
    if (uses_entries && entry_window.first > entry_window.second) throw InvalidInput("empty entry window");
}

Report verify_module(VerifyOptions opts) {
    opts.resolve();
    auto t0 = std::chrono::steady_clock::now();
    SuiteConfig cfg;
    cfg.numeric = opts.numeric;
    cfg.seed = opts.seed;
    cfg.workers = opts.workers;
    cfg.spec.mode_window = opts.mode_window;
    cfg.spec.series_order = opts.series_order;
    nlohmann::json params = {{"module", opts.module},
                             {"mode_window", opts.mode_window},
                             {"series_order", opts.series_order},
                             {"qmode", opts.numeric ? "numeric" : "symbolic"}};
    if (opts.numeric) params["seed"] = opts.seed;
    std::string name = opts.module;
    const auto [lo, hi] = opts.entry_window;
    if (opts.module == "vector") {
        cfg.spec.module = make_vector_module();
        cfg.spec.basis = box(1, lo, hi, false);
        params["entry_window"] = {lo, hi};
    } else if (opts.module == "tensor") {
        cfg.spec.module = make_tensor_module(opts.n);
        cfg.spec.basis = box(opts.n, lo, hi, false);
        params["N"] = opts.n;
        params["entry_window"] = {lo, hi};
        name += std::to_string(opts.n);
    } else if (opts.module == "wn") {
        cfg.spec.module = make_wn_module(opts.n);
        cfg.spec.basis = box(opts.n, lo, hi, true);
        cfg.spec.antisym = true;
        params["N"] = opts.n;
        params["entry_window"] = {lo, hi};
        name += std::to_string(opts.n);
    } else if (opts.module == "fock") {
        cfg.spec.module = make_fock_module();
        for (const auto& p : enumerate_nonneg_upto(opts.max_weight)) cfg.spec.basis.push_back(p.parts());
        params["max_weight"] = opts.max_weight;
    } else {
        cfg.spec.module = make_resonance_module(opts.tail);
        for (const auto& p : enumerate_tailed(opts.tail, opts.max_weight)) cfg.spec.basis.push_back(p.parts());
        params["max_weight"] = opts.max_weight;
        params["k"] = opts.tail.k;
        params["r"] = opts.tail.r;
        params["c"] = opts.tail.c;
        std::ostringstream os;
        os << " k=" << opts.tail.k << " r=" << opts.tail.r << " c=" << Partition::zvalued(opts.tail.c).to_string();
        name += os.str();
    }
    params["basis_size"] = cfg.spec.basis.size();
    cfg.name = name;
    cfg.params = params;
    Report rep = run_suite(cfg);
    if (opts.module == "fock") add_fock_extras(rep, cfg.spec.basis);
    if (opts.module == "resonance") add_resonance_extras(rep, opts.tail, cfg.spec.module, cfg.spec.basis);
    rep.seconds = elapsed(t0);
    return rep;
}

Report verify_daha(int max_n, int max_weight) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "daha";
    rep.params = {{"max_N", max_n}, {"max_weight", max_weight}};
    for (int n = 1; n <= max_n; ++n) rep.merge(check_identification(n, max_weight));
    std::vector<Label> vb = box(1, -3, 3, false);
    rep.merge(check_mode_recursion(make_vector_module(), vb, 2));
    std::vector<Label> fb;
    for (const auto& p : enumerate_nonneg_upto(max_weight)) fb.push_back(p.parts());
    rep.merge(check_mode_recursion(make_fock_module(), fb, 2));
    rep.merge(check_cocycles(std::min(max_weight, 4)));
    rep.seconds = elapsed(t0);
    return rep;
}

Report verify_wheel(int k, int r, int max_weight) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    const int n = k + 1;
    rep.suite = "wheel k=" + std::to_string(k) + " r=" + std::to_string(r);
    rep.params = {{"k", k}, {"r", r}, {"N", n}, {"max_weight", max_weight}};
    for (const auto& p : enumerate_nonneg_upto(max_weight)) {
        if (p.length() > n) continue;
        Label l = p.parts();
        l.resize(static_cast<std::size_t>(n), 0);
        if (!is_admissible(l, k, r)) continue;
        run_case(rep, "wheel v=" + label_text(l), [&] {
            return wheel_vanishes(macdonald_P_laurent(l, n), k, r) ? std::string() : std::string("nonzero on a wheel");
        });
    }
    rep.seconds = elapsed(t0);
    return rep;
}

Report verify_delta(int count, int order, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = "delta";
    rep.params = {{"count", count}, {"order", order}, {"seed", seed}};
    for (int i = 0; i < count; ++i) {
        FactoredScalar f = random_pole_function(seed + static_cast<std::uint64_t>(i), 4);
        run_case(rep, "delta #" + std::to_string(i) + " " + f.to_string(), [&] {
            return delta_identity_holds(f, Var::z, order) ? std::string() : std::string("series difference differs from residues");
        });
    }
    rep.seconds = elapsed(t0);
    return rep;
}

std::vector<Report> acceptance_reports(int criterion, bool numeric, std::uint64_t seed) {
    auto module = [&](const std::string& family, int n = -1) {
        VerifyOptions o;
        o.module = family;
        o.n = n;
        o.numeric = numeric;
        o.seed = seed;
        return verify_module(o);
    };
    std::vector<Report> out;
    switch (criterion) {
    case 1: out.push_back(module("vector")); break;
    case 2: {
        out.push_back(module("tensor", 2));
        out.push_back(module("tensor", 3));
        Report pole;
        pole.suite = "tensor pole collision";
        Monomial u1(Var::u1);
        try {
            make_tensor_module({u1, u1 * Monomial(Var::q1)});
            pole.add("u2 = q1 u1", false, "no PoleCollision raised");
        } catch (const PoleCollision&) {
            pole.add("u2 = q1 u1", true);
        }
        out.push_back(pole);
        break;
    }
    case 3:
        out.push_back(module("wn", 2));
        out.push_back(module("wn", 3));
        break;
    case 4: out.push_back(module("fock")); break;
    case 5: {
        Report r;
        r.suite = "macdonald";
        for (int n = 1; n <= 3; ++n) r.merge(check_identification(n, 5));
        out.push_back(r);
        break;
    }
    case 6: {
        Report r = check_mode_recursion(make_vector_module(), box(1, -3, 3, false), 2);
        std::vector<Label> fb;
        for (const auto& p : enumerate_nonneg_upto(6)) fb.push_back(p.parts());
        r.merge(check_mode_recursion(make_fock_module(), fb, 2));
        out.push_back(r);
        break;
    }
    case 7:
        for (auto [k, r] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}})
            for (const TailSpec& t : all_tail_specs(k, r)) {
                VerifyOptions o;
                o.module = "resonance";
                o.tail = t;
                o.numeric = numeric;
                o.seed = seed;
                out.push_back(verify_module(o));
            }
        break;
    case 8:
        out.push_back(verify_wheel(1, 2, 5));
        out.push_back(verify_wheel(2, 3, 5));
        break;
    case 9: out.push_back(check_cocycles(4)); break;
    case 10: out.push_back(verify_delta(100, 6, seed)); break;
    default: throw InvalidInput("acceptance criteria are numbered 1..10");
    }
    return out;
}

std::string print_object(const std::string& kind, const PrintParams& p) {
    if (kind == "gamma") return gamma_fn(p.i, Monomial(Var::u)).to_string();
    if (kind == "tail") {
        p.tail.validate();
        std::vector<int> v;
        for (int j = 1; j <= p.entries; ++j) v.push_back(tail_value(p.tail, j));
        return Partition::zvalued(v).to_string();
    }
    if (kind == "fock-row") {
        auto fock = make_fock_module();
        Label l = Partition::nonneg(p.shape).parts();
        std::string out;
        for (int m = p.modes.first; m <= p.modes.second; ++m) {
            StateVector v = apply(*fock, {GenKind::e, m}, l);
            std::string line = "e_" + std::to_string(m) + " " + Partition::nonneg(l).to_string() + " =";
            if (v.empty()) line += " 0";
            bool first = true;
            for (const auto& [t, c] : v) {
                line += (first ? " " : " + ") + c.to_string() + " " + Partition::nonneg(t).to_string();
                first = false;
            }
            out += line + "\n";
        }
        return out;
    }
    throw InvalidInput("unknown object kind: " + kind);
}

}  // namespace qgl
