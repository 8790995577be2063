#include "qgl/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "qgl/errors.hpp"
#include "qgl/partition.hpp"

namespace qgl {

namespace {

Monomial x_mono(const std::vector<int>& alpha) {
    Monomial m;
    for (std::size_t i = 0; i < alpha.size(); ++i) m.set(x_var(static_cast<int>(i) + 1), alpha[i]);
    return m;
}

std::vector<Var> x_vars(int n) {
    std::vector<Var> v;
    for (int i = 1; i <= n; ++i) v.push_back(x_var(i));
    return v;
}

std::vector<int> sorted_desc(std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

void check_shape(const std::vector<int>& lambda, int n) {
    if (n < 1 || n > kMaxX) throw InvalidInput("Macdonald: N must be in [1, " + std::to_string(kMaxX) + "]");
    if (static_cast<int>(lambda.size()) != n) throw InvalidInput("Macdonald: shape must have N entries");
    if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
        throw InvalidInput("Macdonald: shape must be weakly decreasing");
}

std::vector<int> padded(std::vector<int> lambda, int n) {
    if (static_cast<int>(lambda.size()) > n) {
        for (std::size_t i = static_cast<std::size_t>(n); i < lambda.size(); ++i)
            if (lambda[i] != 0) throw InvalidInput("Macdonald: more than N nonzero parts");
        lambda.resize(static_cast<std::size_t>(n));
    }
    while (static_cast<int>(lambda.size()) < n) lambda.push_back(0);
    return lambda;
}

LaurentPoly monomial_symmetric(const std::vector<int>& shape) {
    std::vector<int> a = shape;
    std::sort(a.begin(), a.end());
    std::vector<LaurentPoly::Term> terms;
    do terms.push_back({x_mono(a), Rational(1)});
    while (std::next_permutation(a.begin(), a.end()));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly difference(Var a, const Monomial& ca, Var b) {
    LaurentPoly p(ca * Monomial(a));
    p -= LaurentPoly(Monomial(b));
    return p;
}

SymFunc from_polynomial(const LaurentPoly& p, int n) {
    SymFunc out(n);
    for (const auto& [xm, c] : p.group_by(x_vars(n))) {
        std::vector<int> alpha(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) alpha[static_cast<std::size_t>(i)] = xm[x_var(i + 1)];
        if (std::is_sorted(alpha.begin(), alpha.end(), std::greater<>())) out.add(alpha, Scalar(c));
    }
    return out;
}

/// D applied to m_shape: clear the Vandermonde product, apply, divide back.
SymFunc d_on_monomial(const std::vector<int>& shape, int sign) {
    const int n = static_cast<int>(shape.size());
    LaurentPoly m = monomial_symmetric(shape);
    LaurentPoly vandermonde(Rational(1));
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) vandermonde *= difference(x_var(j), Monomial(), x_var(k));
    LaurentPoly total;
    for (int i = 1; i <= n; ++i) {
        LaurentPoly shifted;
        {
            std::vector<LaurentPoly::Term> ts;
            for (const auto& t : m.terms()) ts.push_back({t.mono * Monomial(Var::q, sign * t.mono[x_var(i)]), t.coeff});
            shifted = LaurentPoly::from_terms(std::move(ts));
        }
        LaurentPoly factor(Rational(i % 2 == 1 ? 1 : -1));
        for (int j = 1; j <= n; ++j)
            if (j != i) factor *= difference(x_var(i), Monomial(Var::t, sign), x_var(j));
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (j != i && k != i) factor *= difference(x_var(j), Monomial(), x_var(k));
        factor *= shifted;
        total += factor;
    }
    auto quotient = LaurentPoly::divide_exact(total, vandermonde);
    if (!quotient) throw QglError("Macdonald operator: Vandermonde denominator did not cancel");
    return from_polynomial(*quotient, n);
}

template <class Key, class Value>
class Memo {
public:
    template <class Fn>
    Value get(const Key& key, Fn&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, Value> table_;
};

const SymFunc& d_monomial_cached(const std::vector<int>& shape, int sign) {
    static Memo<std::pair<std::vector<int>, int>, std::shared_ptr<const SymFunc>> memo;
    static thread_local std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const SymFunc>> local;
    auto key = std::make_pair(shape, sign);
    auto it = local.find(key);
    if (it != local.end()) return *it->second;
    auto v = memo.get(key, [&] { return std::make_shared<const SymFunc>(d_on_monomial(shape, sign)); });
    return *local.emplace(key, v).first->second;
}

/// (sum x_i^{sign}) * f in the monomial basis.
SymFunc times_power_sum(const SymFunc& f, int sign) {
    SymFunc out(f.n);
    for (const auto& [mu, c] : f.terms) {
        std::set<std::vector<int>> targets;
        for (int i = 0; i < f.n; ++i) {
            std::vector<int> nu = mu;
            nu[static_cast<std::size_t>(i)] += sign;
            targets.insert(sorted_desc(nu));
        }
        for (const auto& nu : targets) {
            int count = 0;
            for (int i = 0; i < f.n; ++i) {
                std::vector<int> back = nu;
                back[static_cast<std::size_t>(i)] -= sign;
                if (sorted_desc(back) == mu) ++count;
            }
            out.add(nu, c * Scalar(count));
        }
    }
    return out;
}

}  // namespace

void SymFunc::add(const std::vector<int>& shape, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(shape, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void SymFunc::add(const SymFunc& other, const Scalar& c) {
    for (const auto& [s, v] : other.terms) add(s, v * c);
}

Scalar SymFunc::coefficient(const std::vector<int>& shape) const {
    auto it = terms.find(shape);
    return it == terms.end() ? Scalar(0) : it->second;
}

std::map<Monomial, Scalar> SymFunc::expand() const {
    std::map<Monomial, Scalar> out;
    for (const auto& [shape, c] : terms) {
        LaurentPoly m = monomial_symmetric(shape);
        for (const auto& t : m.terms()) out[t.mono] += c;
    }
    return out;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.n != b.n) return false;
    SymFunc d = a;
    d.add(b, Scalar(-1));
    return d.is_zero();
}

nlohmann::json SymFunc::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [shape, c] : terms) ts.push_back({{"shape", shape}, {"coeff", c.to_string()}});
    return {{"N", n}, {"basis", "m"}, {"terms", ts}};
}

std::string SymFunc::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [shape, c] : terms) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + "*m" + Partition::zvalued(shape).to_string();
    }
    return out;
}

MonomialMap macdonald_bridge() {
    MonomialMap m;
    m.set(Var::q, Monomial(Var::q1));
    m.set(Var::t, Monomial(Var::q3, -1));
    return m;
}

SymFunc apply_macdonald_D(const SymFunc& f, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("Macdonald operator sign must be +1 or -1");
    SymFunc out(f.n);
    for (const auto& [shape, c] : f.terms) out.add(d_monomial_cached(shape, sign), c);
    for (auto& [shape, c] : out.terms) c = c.cancelled();
    return out;
}

Scalar d1_eigenvalue(const std::vector<int>& lambda, int n, int sign) {
    std::vector<int> l = padded(lambda, n);
    Scalar e;
    for (int i = 1; i <= n; ++i) {
        Monomial m(Var::q, sign * l[static_cast<std::size_t>(i - 1)]);
        m.set(Var::t, sign * (n - i));
        e += Scalar(m);
    }
    return e;
}

SymFunc macdonald_P(const std::vector<int>& lambda_in, int n) {
    std::vector<int> lambda = padded(lambda_in, n);
    check_shape(lambda, n);
    if (lambda.back() < 0) throw InvalidInput("macdonald_P needs a nonnegative shape");
    static Memo<std::pair<std::vector<int>, int>, SymFunc> memo;
    return memo.get({lambda, n}, [&] {
        int weight = std::accumulate(lambda.begin(), lambda.end(), 0);
        std::vector<std::vector<int>> basis;
        for (const auto& mu : enumerate_nonneg(weight)) {
            if (mu.length() > n) continue;
            std::vector<int> m = padded(mu.parts(), n);
            if (dominance_leq(m, lambda)) basis.push_back(m);
        }
        Scalar e_lambda = d1_eigenvalue(lambda, n, 1);
        SymFunc p(n);
        p.add(lambda, Scalar(1));
        std::vector<std::pair<std::vector<int>, Scalar>> done = {{lambda, Scalar(1)}};
        for (const auto& nu : basis) {
            if (nu == lambda) continue;
            Scalar sum;
            for (const auto& [mu, u] : done) sum += u * d_monomial_cached(mu, 1).coefficient(nu);
            Scalar diag = d_monomial_cached(nu, 1).coefficient(nu);
            if (!(diag == d1_eigenvalue(nu, n, 1))) throw QglError("Macdonald operator is not triangular");
            Scalar gap = e_lambda - diag;
            if (gap.is_zero()) throw QglError("Macdonald eigenvalue collision");
            Scalar u = (sum / gap).cancelled();
            p.add(nu, u);
            done.emplace_back(nu, u);
        }
        return p;
    });
}

SymFunc macdonald_P_laurent(const std::vector<int>& lambda_in, int n) {
    std::vector<int> lambda = padded(lambda_in, n);
    check_shape(lambda, n);
    int shift = lambda.back();
    if (shift == 0) return macdonald_P(lambda, n);
    std::vector<int> base = lambda;
    for (int& v : base) v -= shift;
    SymFunc out(n);
    for (const auto& [shape, c] : macdonald_P(base, n).terms) {
        std::vector<int> s = shape;
        for (int& v : s) v += shift;
        out.terms.emplace(std::move(s), c);
    }
    return out;
}

std::map<std::vector<int>, Scalar> to_p_basis(SymFunc f) {
    std::map<std::vector<int>, Scalar> out;
    while (!f.is_zero()) {
        auto [nu, c] = *f.terms.begin();
        out.emplace(nu, c);
        f.add(macdonald_P_laurent(nu, f.n), -c);
        for (auto& [s, v] : f.terms) v = v.cancelled();
    }
    return out;
}

std::map<std::vector<int>, Scalar> pieri_e1(const std::vector<int>& lambda, int n, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("Pieri sign must be +1 or -1");
    auto out = to_p_basis(times_power_sum(macdonald_P_laurent(lambda, n), sign));
    for (auto& [s, c] : out) c = c.cancelled();
    return out;
}

bool wheel_vanishes(const SymFunc& f, int k, int r) {
    if (f.is_zero()) return true;
    if (k < 1 || r < 1) throw InvalidInput("wheel condition needs k >= 1, r >= 1");
    if (f.n < k + 1) throw InvalidInput("wheel condition needs N >= k + 1");
    MonomialMap resonance;
    resonance.set(Var::q, Monomial(Var::p, k + 1));
    resonance.set(Var::t, Monomial(Var::p, -(r - 1)));
    auto expanded = f.expand();
    std::vector<int> s(static_cast<std::size_t>(k + 1), 0);
    // compositions of r - 1 into k + 1 nonnegative parts
    std::function<bool(int, int)> visit = [&](int pos, int left) -> bool {
        if (pos == k) {
            s[static_cast<std::size_t>(pos)] = left;
            MonomialMap sub;
            int acc = 0;
            for (int i = 2; i <= k + 1; ++i) {
                acc += s[static_cast<std::size_t>(i - 2)];
                Monomial img(Var::x1);
                img.set(Var::t, i - 1);
                img.set(Var::q, acc);
                sub.set(x_var(i), img);
            }
            std::map<Monomial, Scalar> grouped;
            for (const auto& [m, c] : expanded) {
                Monomial image = sub.apply(m);
                Monomial xs, qt = image;
                for (Var v : x_vars(f.n)) {
                    xs.set(v, image[v]);
                    qt.set(v, 0);
                }
                grouped[xs] += c * Scalar(qt);
            }
            for (auto& [xs, c] : grouped) {
                Scalar red = c.cancelled();
                if (red.is_zero()) continue;
                for (const auto& [atom, e] : red.den_atoms())
                    if (atom.substitute(resonance).is_zero())
                        throw ResonanceSingular("wheel substitution hits a pole at the resonance point");
                if (!red.num().substitute(resonance).is_zero()) return false;
            }
            return true;
        }
        for (int v = 0; v <= left; ++v) {
            s[static_cast<std::size_t>(pos)] = v;
            if (!visit(pos + 1, left - v)) return false;
        }
        return true;
    };
    return visit(0, r - 1);
}

}  // namespace qgl
