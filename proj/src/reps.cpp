#include "qgl/reps.hpp"

#include <functional>
#include <numeric>

#include "qgl/resonance.hpp"

namespace qgl {

namespace {

const Monomial kZinv(Var::z, -1);

Monomial qq(int a, int b) { return Monomial::qq(a, b); }

bool is_unit_one(const FactoredScalar& f) {
    return f.factors().empty() && f.degenerate() == 0 && f.coeff().is_one() && f.mono().is_one();
}

// (1 - q1)^-1
FactoredScalar e_prefactor() { return FactoredScalar::factor(Monomial(Var::q1), -1); }

// -(1 - q1^-1)^-1
FactoredScalar f_prefactor() { return FactoredScalar(Rational(-1)) * FactoredScalar::factor(Monomial(Var::q1, -1), -1); }

// Value of a z-function at z = support; a pole there is a PoleCollision.
FactoredScalar eval_at_support(const FactoredScalar& fn, const Monomial& support) {
    FactoredScalar v = evaluate_at(fn, Var::z, support);
    if (v.degenerate() < 0) throw PoleCollision("evaluation at " + support.to_string() + " hits a pole");
    return v;
}

bool weakly_decreasing(const Label& l) {
    for (std::size_t i = 1; i < l.size(); ++i)
        if (l[i] > l[i - 1]) return false;
    return true;
}

std::vector<int> with_box(const Label& l, int i, int d) {
    std::vector<int> p = l;
    if (static_cast<int>(p.size()) < i) p.resize(static_cast<std::size_t>(i), 0);
    p[static_cast<std::size_t>(i - 1)] += d;
    return p;
}

using Accessor = std::function<int(int)>;

// (1-q1) <lambda+1_i| e(z) |lambda> product over j < i
FactoredScalar wn_e_coeff(const Accessor& lam, int i) {
    FactoredScalar c = e_prefactor();
    for (int j = 1; j < i; ++j) {
        int d = lam(i) - lam(j);
        c.mul_factor(qq(d, i - j - 1));
        c.mul_factor(qq(d + 1, i - j + 1));
        c.mul_factor(qq(d, i - j), -1);
        c.mul_factor(qq(d + 1, i - j), -1);
    }
    return c;
}

// -(1-q1^-1) <lambda-1_i| f(z) |lambda> product over i < j <= n
FactoredScalar wn_f_coeff(const Accessor& lam, int i, int n) {
    FactoredScalar c = f_prefactor();
    for (int j = i + 1; j <= n; ++j) {
        int d = lam(j) - lam(i);
        c.mul_factor(qq(d + 1, j - i + 1));
        c.mul_factor(qq(d, j - i - 1));
        c.mul_factor(qq(d + 1, j - i), -1);
        c.mul_factor(qq(d, j - i), -1);
    }
    return c;
}

FactoredScalar wn_psi(const Accessor& lam, int n, const Monomial& u) {
    FactoredScalar c;
    Monomial s = u * kZinv;
    for (int i = 1; i <= n; ++i) {
        c.mul_factor(qq(lam(i), i) * s);
        c.mul_factor(qq(lam(i) - 1, i - 2) * s);
        c.mul_factor(qq(lam(i), i - 1) * s, -1);
        c.mul_factor(qq(lam(i) - 1, i - 1) * s, -1);
    }
    return c;
}

Monomial e_support(const Accessor& lam, int i, const Monomial& u) { return qq(lam(i), i - 1) * u; }
Monomial f_support(const Accessor& lam, int i, const Monomial& u) { return qq(lam(i) - 1, i - 1) * u; }

Accessor of(const Label& l) {
    return [&l](int i) { return l.at(static_cast<std::size_t>(i - 1)); };
}

// ------------------------------------------------------------------ V(u)

class VectorModule final : public Module {
public:
    explicit VectorModule(Monomial u) : u_(u) {}
    std::string family() const override { return "vector"; }
    std::vector<DeltaTerm> e_terms(const Label& l) const override {
        int i = l.at(0);
        return {{qq(i, 0) * u_, e_prefactor(), {i + 1}}};
    }
    std::vector<DeltaTerm> f_terms(const Label& l) const override {
        int i = l.at(0);
        return {{qq(i - 1, 0) * u_, f_prefactor(), {i - 1}}};
    }
    FactoredScalar psi_function(const Label& l) const override { return gamma_fn(l.at(0), u_); }
    std::pair<Scalar, Scalar> level() const override { return {Scalar(1), Scalar(1)}; }
    bool contains(const Label& l) const override { return l.size() == 1; }
    nlohmann::json label_json(const Label& l) const override { return l.at(0); }

private:
    Monomial u_;
};

// ------------------------------------------------------------------ tensor

class TensorModule final : public Module {
public:
    explicit TensorModule(std::vector<Monomial> us) : us_(std::move(us)) {
        for (std::size_t a = 0; a < us_.size(); ++a)
            for (std::size_t b = 0; b < us_.size(); ++b) {
                if (a == b) continue;
                Monomial ratio = us_[a] / us_[b];
                if (ratio.without(Var::q1).is_one())
                    throw PoleCollision("tensor parameters violate u_i/u_j != q1^k for (" + std::to_string(a + 1) +
                                        "," + std::to_string(b + 1) + ")");
            }
    }
    std::string family() const override { return "tensor"; }
    std::vector<DeltaTerm> e_terms(const Label& a) const override {
        std::vector<DeltaTerm> out;
        int n = static_cast<int>(us_.size());
        for (int s = 0; s < n; ++s) {
            Monomial support = qq(a[s], 0) * us_[s];
            FactoredScalar c = e_prefactor();
            for (int l = 0; l < s; ++l) c *= eval_at_support(gamma_fn(a[l], us_[l]), support);
            if (c.is_zero()) continue;
            Label t = a;
            t[s] += 1;
            out.push_back({support, c, t});
        }
        return out;
    }
    std::vector<DeltaTerm> f_terms(const Label& a) const override {
        std::vector<DeltaTerm> out;
        int n = static_cast<int>(us_.size());
        for (int s = 0; s < n; ++s) {
            Monomial support = qq(a[s] - 1, 0) * us_[s];
            FactoredScalar c = f_prefactor();
            for (int l = s + 1; l < n; ++l) c *= eval_at_support(gamma_fn(a[l], us_[l]), support);
            if (c.is_zero()) continue;
            Label t = a;
            t[s] -= 1;
            out.push_back({support, c, t});
        }
        return out;
    }
    FactoredScalar psi_function(const Label& a) const override {
        FactoredScalar c;
        for (std::size_t s = 0; s < us_.size(); ++s) c *= gamma_fn(a[s], us_[s]);
        return c;
    }
    std::pair<Scalar, Scalar> level() const override { return {Scalar(1), Scalar(1)}; }
    bool contains(const Label& a) const override { return a.size() == us_.size(); }

private:
    std::vector<Monomial> us_;
};

// ------------------------------------------------------------------ W^N

class WnModule final : public Module {
public:
    WnModule(int n, Monomial u, bool modified) : n_(n), u_(u), modified_(modified) {
        if (n < 1) throw InvalidInput("W^N needs N >= 1");
    }
    std::string family() const override { return modified_ ? "wn+" : "wn"; }
    std::vector<DeltaTerm> e_terms(const Label& l) const override {
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= n_; ++i) {
            FactoredScalar c = wn_e_coeff(of(l), i);
            if (c.is_zero()) continue;
            Label t = l;
            t[i - 1] += 1;
            if (!contains(t)) throw QglError("W^N: e leaves the partition set at " + label_string(l));
            out.push_back({e_support(of(l), i, u_), c, t});
        }
        return out;
    }
    std::vector<DeltaTerm> f_terms(const Label& l) const override {
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= n_; ++i) {
            FactoredScalar c = wn_f_coeff(of(l), i, n_);
            Monomial support = f_support(of(l), i, u_);
            if (modified_) c *= eval_at_support(beta_n(n_, u_), support);
            if (c.is_zero()) continue;
            Label t = l;
            t[i - 1] -= 1;
            if (!contains(t)) throw QglError("W^N: f leaves the partition set at " + label_string(l));
            out.push_back({support, c, t});
        }
        return out;
    }
    FactoredScalar psi_function(const Label& l) const override {
        FactoredScalar c = wn_psi(of(l), n_, u_);
        if (modified_) c *= beta_n(n_, u_);
        return c;
    }
    std::pair<Scalar, Scalar> level() const override {
        return {Scalar(1), modified_ ? Scalar(Monomial::q2()) : Scalar(1)};
    }
    bool contains(const Label& l) const override {
        if (static_cast<int>(l.size()) != n_ || !weakly_decreasing(l)) return false;
        return !modified_ || l.back() >= 0;
    }

private:
    static std::string label_string(const Label& l) { return Partition::zvalued(l).to_string(); }
    int n_;
    Monomial u_;
    bool modified_;
};

// ------------------------------------------------------------------ Fock

class FockModule final : public Module {
public:
    explicit FockModule(Monomial u) : u_(u) {}
    std::string family() const override { return "fock"; }

    std::vector<DeltaTerm> e_terms(const Label& l) const override {
        auto lam = accessor(l);
        int len = static_cast<int>(l.size());
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= len + 1; ++i) {
            FactoredScalar c = wn_e_coeff(lam, i);
            if (c.is_zero()) continue;
            out.push_back({e_support(lam, i, u_), c, Partition::nonneg(with_box(l, i, +1)).parts()});
        }
        if (!wn_e_coeff(lam, len + 2).is_zero()) throw QglError("Fock: e row beyond length+1 is nonzero");
        return out;
    }

    std::vector<DeltaTerm> f_terms(const Label& l) const override {
        auto lam = accessor(l);
        int len = static_cast<int>(l.size());
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= len + 1; ++i) {
            FactoredScalar c = coeff_f(lam, i, len);
            if (c.is_zero()) continue;
            if (i > len) throw QglError("Fock: f row beyond the length is nonzero");
            out.push_back({f_support(lam, i, u_), c, Partition::nonneg(with_box(l, i, -1)).parts()});
        }
        return out;
    }

    FactoredScalar psi_function(const Label& l) const override {
        auto lam = accessor(l);
        int len = static_cast<int>(l.size());
        Monomial s = u_ * kZinv;
        FactoredScalar c = FactoredScalar::factor(qq(lam(1) - 1, -1) * s) * FactoredScalar::factor(qq(lam(1), 0) * s, -1);
        for (int i = 1; i <= len; ++i) c *= psi_factor(lam, i);
        if (!is_unit_one(psi_factor(lam, len + 1))) throw QglError("Fock: psi tail factor is not 1");
        return c;
    }

    std::pair<Scalar, Scalar> level() const override { return {Scalar(1), Scalar(Monomial::q2())}; }

    bool contains(const Label& l) const override {
        return weakly_decreasing(l) && (l.empty() || l.back() > 0);
    }

private:
    static Accessor accessor(const Label& l) {
        return [&l](int i) { return i <= static_cast<int>(l.size()) ? l[static_cast<std::size_t>(i - 1)] : 0; };
    }
    static FactoredScalar f_tail_factor(const Accessor& lam, int i, int j) {
        FactoredScalar c;
        c.mul_factor(qq(lam(j) - lam(i) + 1, j - i + 1));
        c.mul_factor(qq(lam(j + 1) - lam(i), j - i));
        c.mul_factor(qq(lam(j + 1) - lam(i) + 1, j - i + 1), -1);
        c.mul_factor(qq(lam(j) - lam(i), j - i), -1);
        return c;
    }
    static FactoredScalar coeff_f(const Accessor& lam, int i, int len) {
        FactoredScalar c = f_prefactor();
        c.mul_factor(qq(lam(i + 1) - lam(i), 0));
        c.mul_factor(qq(lam(i + 1) - lam(i) + 1, 1), -1);
        int last = std::max(len, i);
        for (int j = i + 1; j <= last; ++j) c *= f_tail_factor(lam, i, j);
        if (!is_unit_one(f_tail_factor(lam, i, last + 1))) throw QglError("Fock: f tail factor is not 1");
        return c;
    }
    FactoredScalar psi_factor(const Accessor& lam, int i) const {
        Monomial s = u_ * kZinv;
        FactoredScalar c;
        c.mul_factor(qq(lam(i), i) * s);
        c.mul_factor(qq(lam(i + 1) - 1, i - 1) * s);
        c.mul_factor(qq(lam(i + 1), i) * s, -1);
        c.mul_factor(qq(lam(i) - 1, i - 1) * s, -1);
        return c;
    }

    Monomial u_;
};

// ------------------------------------------------------------------ resonance

class ResonanceBase : public Module {
public:
    ResonanceBase(TailSpec tail, Monomial u) : tail_(std::move(tail)), u_(u) {
        tail_.validate();
        map_ = resonance_map(tail_.k, tail_.r);
    }
    std::pair<Scalar, Scalar> level() const override {
        return {Scalar(1), Scalar(Monomial(Var::p, tail_.k * (tail_.r - 1)))};
    }
    Scalar specialize(const Scalar& s) const override { return s.substitute(map_); }

protected:
    FactoredScalar reduce(const FactoredScalar& f) const { return resonance_reduce(f, tail_.k, tail_.r); }
    Monomial spec(const Monomial& m) const { return map_.apply(m); }

    TailSpec tail_;
    Monomial u_;
    MonomialMap map_;
};

class ResonanceModule final : public ResonanceBase {
public:
    using ResonanceBase::ResonanceBase;
    std::string family() const override { return "resonance"; }

    std::vector<DeltaTerm> e_terms(const Label& l) const override {
        auto lam = accessor(l);
        int len = static_cast<int>(l.size());
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= len + tail_.k + 1; ++i) {
            FactoredScalar c = reduce(wn_e_coeff(lam, i));
            if (c.is_zero()) continue;
            Label t = shifted(l, i, +1);
            if (!contains(t)) throw QglError("resonance: e leaves the admissible set at " + render(l));
            out.push_back({spec(e_support(lam, i, u_)), c, trimmed(t)});
        }
        return out;
    }

    std::vector<DeltaTerm> f_terms(const Label& l) const override {
        auto lam = accessor(l);
        int len = static_cast<int>(l.size());
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= len + tail_.k; ++i) {
            FactoredScalar c = reduce(coeff_f(lam, i, len));
            if (c.is_zero()) continue;
            Label t = shifted(l, i, -1);
            if (!contains(t)) throw QglError("resonance: f leaves the admissible set at " + render(l));
            out.push_back({spec(f_support(lam, i, u_)), c, trimmed(t)});
        }
        return out;
    }

    FactoredScalar psi_function(const Label& l) const override {
        auto lam = accessor(l);
        int len = static_cast<int>(l.size());
        Monomial s = u_ * kZinv;
        FactoredScalar c;
        for (int i = 1; i <= tail_.k; ++i) {
            c.mul_factor(qq(lam(i), i) * s);
            c.mul_factor(qq(lam(i), i - 1) * s, -1);
        }
        for (int i = 1; i <= len; ++i) c *= psi_factor(lam, i);
        for (int i = len + 1; i <= len + tail_.k; ++i)
            if (!is_unit_one(psi_factor(lam, i).substitute(map_)))
                throw QglError("resonance: psi tail factor is not 1");
        return c.substitute(map_);
    }

    bool contains(const Label& l) const override {
        Label full = l;
        int len = static_cast<int>(l.size());
        for (int i = len + 1; i <= len + 2 * tail_.k; ++i) full.push_back(tail_value(tail_, i));
        if (!weakly_decreasing(full) || !is_admissible(full, tail_.k, tail_.r)) return false;
        for (int i = 1; i <= len; ++i)
            if (l[static_cast<std::size_t>(i - 1)] < tail_value(tail_, i)) return false;
        return true;
    }

    nlohmann::json label_json(const Label& l) const override { return Partition::tailed(l, tail_).to_json(); }

private:
    Accessor accessor(const Label& l) const {
        return [&l, this](int i) {
            return i <= static_cast<int>(l.size()) ? l[static_cast<std::size_t>(i - 1)] : tail_value(tail_, i);
        };
    }
    Label shifted(const Label& l, int i, int d) const {
        Label t = l;
        while (static_cast<int>(t.size()) < i + tail_.k) t.push_back(tail_value(tail_, static_cast<int>(t.size()) + 1));
        t[static_cast<std::size_t>(i - 1)] += d;
        return t;
    }
    Label trimmed(Label t) const {
        while (!t.empty() && t.back() == tail_value(tail_, static_cast<int>(t.size()))) t.pop_back();
        return t;
    }
    std::string render(const Label& l) const { return Partition::tailed(l, tail_).to_string(); }

    FactoredScalar f_tail_factor(const Accessor& lam, int i, int j) const {
        int k = tail_.k;
        FactoredScalar c;
        c.mul_factor(qq(lam(j + k) - lam(i) + 1, j + k - i + 1));
        c.mul_factor(qq(lam(j) - lam(i), j - i - 1));
        c.mul_factor(qq(lam(j) - lam(i), j - i), -1);
        c.mul_factor(qq(lam(j + k) - lam(i) + 1, j + k - i), -1);
        return c;
    }
    FactoredScalar coeff_f(const Accessor& lam, int i, int len) const {
        int k = tail_.k;
        FactoredScalar c = f_prefactor();
        for (int j = i + 1; j <= i + k; ++j) {
            c.mul_factor(qq(lam(j) - lam(i) + 1, j - i + 1));
            c.mul_factor(qq(lam(j) - lam(i) + 1, j - i), -1);
        }
        // one extra tail period: equal entries inside the tail give literal zeros
        int last = std::max(len, i) + k;
        for (int j = i + 1; j <= last; ++j) c *= f_tail_factor(lam, i, j);
        for (int j = last + 1; j <= last + k; ++j)
            if (!is_unit_one(reduce(f_tail_factor(lam, i, j)))) throw QglError("resonance: f tail factor is not 1");
        return c;
    }
    FactoredScalar psi_factor(const Accessor& lam, int i) const {
        int k = tail_.k;
        Monomial s = u_ * kZinv;
        FactoredScalar c;
        c.mul_factor(qq(lam(i) - 1, i - 2) * s);
        c.mul_factor(qq(lam(i + k), i + k) * s);
        c.mul_factor(qq(lam(i + k), i + k - 1) * s, -1);
        c.mul_factor(qq(lam(i) - 1, i - 1) * s, -1);
        return c;
    }
};

class ResonanceFiniteModule final : public ResonanceBase {
public:
    ResonanceFiniteModule(TailSpec tail, int n, Monomial u) : ResonanceBase(std::move(tail), u), n_(n) {
        if (n < 1) throw InvalidInput("finite resonance module needs N >= 1");
        beta_ = beta_kn(tail_, n_, u_);
    }
    std::string family() const override { return "resonance-finite"; }

    std::vector<DeltaTerm> e_terms(const Label& l) const override {
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= n_; ++i) {
            FactoredScalar c = reduce(wn_e_coeff(of(l), i));
            if (c.is_zero()) continue;
            Label t = l;
            t[static_cast<std::size_t>(i - 1)] += 1;
            if (!contains(t)) throw QglError("finite resonance: e leaves the admissible set");
            out.push_back({spec(e_support(of(l), i, u_)), c, t});
        }
        return out;
    }

    std::vector<DeltaTerm> f_terms(const Label& l) const override {
        std::vector<DeltaTerm> out;
        for (int i = 1; i <= n_; ++i) {
            Monomial support = f_support(of(l), i, u_);
            FactoredScalar c = wn_f_coeff(of(l), i, n_) * eval_at_support(beta_, support);
            c = reduce(c);
            if (c.is_zero()) continue;
            Label t = l;
            t[static_cast<std::size_t>(i - 1)] -= 1;
            if (!contains(t)) throw QglError("finite resonance: f leaves the admissible set");
            out.push_back({spec(support), c, t});
        }
        return out;
    }

    FactoredScalar psi_function(const Label& l) const override {
        return (wn_psi(of(l), n_, u_) * beta_).substitute(map_);
    }

    bool contains(const Label& l) const override {
        if (static_cast<int>(l.size()) != n_ || !weakly_decreasing(l)) return false;
        if (!is_admissible(l, tail_.k, tail_.r)) return false;
        for (int i = 1; i <= n_; ++i)
            if (l[static_cast<std::size_t>(i - 1)] < tail_value(tail_, i)) return false;
        return true;
    }

private:
    int n_;
    FactoredScalar beta_;
};

}  // namespace

// ------------------------------------------------------------------ public

void GeneratorMode::validate() const {
    if (kind == GenKind::psi_plus && mode < 0) throw InvalidInput("psi+ modes are nonnegative");
    if (kind == GenKind::psi_minus && mode > 0) throw InvalidInput("psi- modes are nonpositive");
}

std::string GeneratorMode::to_string() const {
    static const char* names[] = {"e", "f", "psi+", "psi-"};
    return std::string(names[static_cast<int>(kind)]) + "_" + std::to_string(mode);
}

nlohmann::json Module::label_json(const Label& label) const { return nlohmann::json(label); }

FactoredScalar gamma_fn(int i, const Monomial& u) {
    Monomial s = u * kZinv;
    FactoredScalar c;
    c.mul_factor(qq(i, 1) * s);
    c.mul_factor(Monomial::q2() * qq(i, 0) * s);
    c.mul_factor(qq(i - 1, 0) * s, -1);
    c.mul_factor(qq(i, 0) * s, -1);
    return c;
}

FactoredScalar beta_n(int n, const Monomial& u) {
    Monomial s = u * kZinv;
    return FactoredScalar::factor(Monomial::q2() * qq(0, n) * s) * FactoredScalar::factor(qq(0, n) * s, -1);
}

FactoredScalar beta_kn(const TailSpec& tail, int n, const Monomial& u) {
    Monomial s = u * kZinv;
    FactoredScalar c;
    for (int i = n + 1; i <= n + tail.k; ++i) {
        int l0 = tail_value(tail, i);
        c.mul_factor(qq(l0, i) * s);
        c.mul_factor(qq(l0, i - 1) * s, -1);
    }
    return c;
}

FactoredScalar beta_kn_displayed(const TailSpec& tail, int n, const Monomial& u) {
    Monomial s = u * kZinv;
    int nu = (n - 1) / tail.k;
    int i = (n - 1) % tail.k;
    int ci = i == 0 ? 0 : tail.c[static_cast<std::size_t>(i - 1)];
    FactoredScalar c;
    for (int j = 0; j <= i; ++j) {
        c.mul_factor(qq(-ci - nu - 1, -nu + j) * s);
        c.mul_factor(qq(-ci - nu - 1, -nu + j - 1) * s, -1);
    }
    for (int j = i + 1; j <= tail.k - 1; ++j) {
        c.mul_factor(qq(-ci - nu, -nu + j + 1) * s);
        c.mul_factor(qq(-ci - nu, -nu + j) * s, -1);
    }
    return c;
}

ModulePtr make_vector_module(const Monomial& u) { return std::make_shared<VectorModule>(u); }

ModulePtr make_tensor_module(int n) {
    if (n < 1 || n > kMaxU) throw InvalidInput("tensor modules support 1..4 factors");
    std::vector<Monomial> us;
    for (int s = 1; s <= n; ++s) us.emplace_back(u_var(s));
    return std::make_shared<TensorModule>(std::move(us));
}

ModulePtr make_tensor_module(std::vector<Monomial> us) { return std::make_shared<TensorModule>(std::move(us)); }

ModulePtr make_wn_module(int n, const Monomial& u, bool modified) {
    return std::make_shared<WnModule>(n, u, modified);
}

ModulePtr make_fock_module(const Monomial& u) { return std::make_shared<FockModule>(u); }

ModulePtr make_resonance_module(const TailSpec& tail, const Monomial& u) {
    return std::make_shared<ResonanceModule>(tail, u);
}

ModulePtr make_resonance_finite_module(const TailSpec& tail, int n, const Monomial& u) {
    return std::make_shared<ResonanceFiniteModule>(tail, n, u);
}

StateVector apply(const Module& mod, const GeneratorMode& g, const Label& label) {
    g.validate();
    if (!mod.contains(label)) throw InvalidInput("label is not a basis vector of the " + mod.family() + " module");
    StateVector out;
    auto add = [&out](const Label& t, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = out[t];
        slot += c;
        if (slot.is_zero()) out.erase(t);
    };
    switch (g.kind) {
        case GenKind::e:
        case GenKind::f: {
            auto terms = g.kind == GenKind::e ? mod.e_terms(label) : mod.f_terms(label);
            for (const auto& t : terms) add(t.target, Scalar::from_factored(t.coeff.times(1, t.support.pow(g.mode))));
            break;
        }
        case GenKind::psi_plus:
        case GenKind::psi_minus: {
            Direction dir = g.kind == GenKind::psi_plus ? Direction::at_infinity : Direction::at_zero;
            int m = std::abs(g.mode);
            add(label, series_expand(mod.psi_function(label), Var::z, dir, m).coeffs[static_cast<std::size_t>(m)]);
            break;
        }
    }
    return out;
}

StateVector vector_apply(const GeneratorMode& g, int i, const Monomial& u) {
    return apply(*make_vector_module(u), g, {i});
}

StateVector tensor_apply(const GeneratorMode& g, const Label& a, const std::vector<Monomial>& us) {
    return apply(*make_tensor_module(us), g, a);
}

StateVector wn_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u) {
    return apply(*make_wn_module(lambda.length(), u, false), g, lambda.parts());
}

StateVector wn_modified_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u) {
    return apply(*make_wn_module(lambda.length(), u, true), g, lambda.parts());
}

StateVector fock_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u) {
    return apply(*make_fock_module(u), g, Partition::nonneg(lambda.parts()).parts());
}

StateVector resonance_apply(const GeneratorMode& g, const Partition& lambda, const Monomial& u) {
    if (lambda.kind() != PartitionKind::tailed) throw InvalidInput("resonance_apply needs a tailed partition");
    return apply(*make_resonance_module(lambda.tail(), u), g, lambda.parts());
}

namespace {

using DeltaTable = std::map<std::pair<Label, Monomial>, Scalar>;

DeltaTable delta_table(const std::vector<DeltaTerm>& terms, const std::function<Label(const Label&)>& relabel) {
    DeltaTable out;
    for (const auto& t : terms) out[{relabel(t.target), t.support}] += Scalar::from_factored(t.coeff);
    return out;
}

std::string compare_tables(const DeltaTable& a, const DeltaTable& b) {
    std::map<std::pair<Label, Monomial>, std::pair<Scalar, Scalar>> all;
    for (const auto& [k, v] : a) all[k].first = v;
    for (const auto& [k, v] : b) all[k].second = v;
    for (const auto& [k, v] : all)
        if (!(v.first == v.second))
            return "target " + Partition::zvalued(k.first).to_string() + " at " + k.second.to_string() + ": " +
                   v.first.to_string() + " vs " + v.second.to_string();
    return {};
}

/// Compares the action of `a` on la with the action of `b` on lb after
/// relabelling targets of both sides into a common label space.
std::string compare_actions(const Module& a, const Label& la, const std::function<Label(const Label&)>& ra,
                            const Module& b, const Label& lb, const std::function<Label(const Label&)>& rb,
                            const std::string& what) {
    try {
        if (auto d = compare_tables(delta_table(a.e_terms(la), ra), delta_table(b.e_terms(lb), rb)); !d.empty())
            return what + " e: " + d;
        if (auto d = compare_tables(delta_table(a.f_terms(la), ra), delta_table(b.f_terms(lb), rb)); !d.empty())
            return what + " f: " + d;
        if (!(Scalar::from_factored(a.psi_function(la)) == Scalar::from_factored(b.psi_function(lb))))
            return what + " psi differs";
    } catch (const std::exception& e) {
        return what + ": " + e.what();
    }
    return {};
}

}  // namespace

std::string wn_truncation_stability(const std::vector<int>& lambda, const Monomial& u) {
    int n = static_cast<int>(lambda.size());
    if (n < 1 || lambda.back() != 0) throw InvalidInput("stability needs lambda_N = 0");
    auto small = make_wn_module(n, u, true);
    auto big = make_wn_module(n + 1, u, true);
    auto fock = make_fock_module(u);
    auto pad = [](const Label& l) {
        Label t = l;
        t.push_back(0);
        return t;
    };
    auto same = [](const Label& l) { return l; };
    auto trim = [](const Label& l) { return Partition::nonneg(l).parts(); };
    if (auto d = compare_actions(*small, lambda, pad, *big, pad(lambda), same, "N vs N+1"); !d.empty()) return d;
    return compare_actions(*small, lambda, trim, *fock, trim(lambda), same, "N vs limit");
}

std::string resonance_truncation_stability(const TailSpec& tail, const std::vector<int>& lambda, const Monomial& u) {
    int n = static_cast<int>(lambda.size());
    if (n < tail.k) throw InvalidInput("stability needs N >= k");
    for (int j = n - tail.k + 1; j <= n; ++j)
        if (lambda[static_cast<std::size_t>(j - 1)] != tail_value(tail, j))
            throw InvalidInput("stability needs the last k entries on the tail");
    auto small = make_resonance_finite_module(tail, n, u);
    auto big = make_resonance_finite_module(tail, n + tail.k, u);
    auto limit = make_resonance_module(tail, u);
    auto extend = [&tail](const Label& l) {
        Label t = l;
        int m = static_cast<int>(l.size());
        for (int j = m + 1; j <= m + tail.k; ++j) t.push_back(tail_value(tail, j));
        return t;
    };
    auto trim = [&tail](const Label& l) {
        Label t = l;
        while (!t.empty() && t.back() == tail_value(tail, static_cast<int>(t.size()))) t.pop_back();
        return t;
    };
    auto same = [](const Label& l) { return l; };
    if (auto d = compare_actions(*small, lambda, extend, *big, extend(lambda), same, "N vs N+k"); !d.empty()) return d;
    return compare_actions(*small, lambda, trim, *limit, trim(lambda), same, "N vs limit");
}

bool fock_factorized_check(const Partition& lambda, const Monomial& u) {
    Label l = Partition::nonneg(lambda.parts()).parts();
    FockModule fock(u);
    int len = static_cast<int>(l.size());
    auto lam = [&l](int i) { return i <= static_cast<int>(l.size()) ? l[static_cast<std::size_t>(i - 1)] : 0; };
    auto comp_u = [&u](int i) { return u * Monomial::q2(-(i - 1)); };
    Monomial s = u * kZinv;
    FactoredScalar psi_empty = FactoredScalar::factor(Monomial::q2() * s) * FactoredScalar::factor(s, -1);

    // psi: vacuum times component ratios
    FactoredScalar psi = psi_empty;
    for (int i = 1; i <= len; ++i)
        psi *= gamma_fn(lam(i) - i + 1, comp_u(i)) * gamma_fn(-i + 1, comp_u(i)).inverse();
    if (!(Scalar::from_factored(psi) == Scalar::from_factored(fock.psi_function(l)))) return false;

    // e: component coefficient times earlier component eigenvalues at the support
    std::map<Label, FactoredScalar> e_direct;
    for (const auto& t : fock.e_terms(l)) e_direct[t.target] = t.coeff;
    for (int i = 1; i <= len + 1; ++i) {
        if (i > 1 && lam(i - 1) == lam(i)) continue;
        Monomial support = qq(lam(i), i - 1) * u;
        FactoredScalar c = e_prefactor();
        for (int j = 1; j < i; ++j) c *= eval_at_support(gamma_fn(lam(j) - j + 1, comp_u(j)), support);
        Label target = Partition::nonneg(with_box(l, i, +1)).parts();
        auto it = e_direct.find(target);
        Scalar direct = it == e_direct.end() ? Scalar() : Scalar::from_factored(it->second);
        if (!(direct == Scalar::from_factored(c))) return false;
    }

    // f on mu = lambda + 1_i back to lambda
    for (int i = 1; i <= len + 1; ++i) {
        if (i > 1 && lam(i - 1) == lam(i)) continue;
        Label mu = Partition::nonneg(with_box(l, i, +1)).parts();
        auto mlam = [&mu](int j) { return j <= static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(j - 1)] : 0; };
        Monomial support = qq(mlam(i) - 1, i - 1) * u;
        FactoredScalar fn = FactoredScalar::factor(Monomial::q2() * qq(0, i) * s) * FactoredScalar::factor(qq(0, i) * s, -1);
        for (int j = i + 1; j <= static_cast<int>(mu.size()) + 1; ++j)
            fn *= gamma_fn(mlam(j) - j + 1, comp_u(j)) * gamma_fn(-j + 1, comp_u(j)).inverse();
        FactoredScalar c = f_prefactor() * eval_at_support(fn, support);
        Scalar direct;
        for (const auto& t : fock.f_terms(mu))
            if (t.target == l) direct += Scalar::from_factored(t.coeff);
        if (!(direct == Scalar::from_factored(c))) return false;
    }
    return true;
}

bool state_equal(const StateVector& a, const StateVector& b) {
    for (const auto& [l, c] : a) {
        auto it = b.find(l);
        if (!(c == (it == b.end() ? Scalar() : it->second))) return false;
    }
    for (const auto& [l, c] : b)
        if (!a.count(l) && !c.is_zero()) return false;
    return true;
}

nlohmann::json state_to_json(const Module& mod, const StateVector& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, c] : v) terms.push_back({{"label", mod.label_json(l)}, {"coeff", c.to_string()}});
    return {{"basis", mod.family()}, {"terms", terms}};
}

}  // namespace qgl
