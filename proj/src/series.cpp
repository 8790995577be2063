#include "qgl/series.hpp"

#include <map>
#include <random>
#include <set>

namespace qgl {

namespace {

using PolySeries = std::vector<LaurentPoly>;

Rational binom(std::int64_t n, std::int64_t k) {
    Rational r(1);
    for (std::int64_t i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

void mul_trunc(PolySeries& acc, const PolySeries& f) {
    PolySeries out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < acc.size() && j < f.size(); ++j)
            if (!f[j].is_zero()) out[i + j] += acc[i] * f[j];
    }
    acc = std::move(out);
}

// (1 - b t^n)^k truncated at t^order, n > 0
PolySeries binomial_series(const Monomial& b, int n, int k, int order) {
    PolySeries s(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j * n <= order; ++j) {
        Rational c;
        if (k >= 0) {
            if (j > k) break;
            c = binom(k, j) * ((j % 2) ? Rational(-1) : Rational(1));
        } else {
            c = binom(-k + j - 1, j);
        }
        s[static_cast<std::size_t>(j * n)] += LaurentPoly(b.pow(j), c);
    }
    return s;
}

}  // namespace

SeriesTrunc series_expand(const FactoredScalar& f, Var v, Direction dir, int order) {
    if (order < 0) throw InvalidInput("series_expand: negative order");
    SeriesTrunc out{dir, order, std::vector<Scalar>(static_cast<std::size_t>(order) + 1)};
    if (f.is_zero()) return out;
    const int sgn = dir == Direction::at_infinity ? -1 : 1;  // t = v^sgn
    FactoredScalar constant(f.coeff(), f.mono().without(v));
    if (f.degenerate() != 0) constant.mul_factor(Monomial(), f.degenerate());
    int shift = sgn * f.mono()[v];
    std::vector<std::tuple<Monomial, int, int>> series_factors;  // b, n, k for (1 - b t^n)^k
    for (const auto& [a, k] : f.factors()) {
        int ev = a[v];
        if (ev == 0) {
            constant.mul_factor(a, k);
            continue;
        }
        Monomial rest = a.without(v);
        int n = sgn * ev;
        if (n > 0) {
            series_factors.emplace_back(rest, n, k);
        } else {
            // 1 - rest t^n = -rest t^n (1 - rest^-1 t^-n)
            constant = constant.times((k % 2) ? Rational(-1) : Rational(1), rest.pow(k));
            shift += n * k;
            series_factors.emplace_back(rest.inverse(), -n, k);
        }
    }
    if (shift < 0) throw QglError("series_expand: function is singular at the expansion point");
    if (shift > order) return out;
    PolySeries acc(static_cast<std::size_t>(order - shift) + 1);
    acc[0] = LaurentPoly(Rational(1));
    for (const auto& [b, n, k] : series_factors) mul_trunc(acc, binomial_series(b, n, k, order - shift));
    Scalar c = Scalar::from_factored(constant);
    for (int m = shift; m <= order; ++m) out.coeffs[static_cast<std::size_t>(m)] = c * Scalar(acc[m - shift]);
    return out;
}

FactoredScalar evaluate_at(const FactoredScalar& f, Var v, const Monomial& at) {
    MonomialMap map;
    map.set(v, at);
    return f.substitute(map);
}

std::vector<Residue> delta_residues(const FactoredScalar& f, Var v) {
    // Orient each v-factor as (1 - c v^-1)^k; poles sit at v = c for k < 0.
    FactoredScalar g(f.coeff(), f.mono());
    if (f.degenerate() != 0) g.mul_factor(Monomial(), f.degenerate());
    std::map<Monomial, int> oriented;  // c -> k
    for (const auto& [a, k] : f.factors()) {
        int ev = a[v];
        if (ev == 0) {
            g.mul_factor(a, k);
            continue;
        }
        if (ev != 1 && ev != -1) throw QglError("delta_residues: factor is not linear in the variable");
        Monomial c = ev == -1 ? a.without(v) : a.without(v).inverse();
        if (ev == 1) {
            // 1 - a = -a (1 - a^-1)
            g = g.times((k % 2) ? Rational(-1) : Rational(1), a.pow(k));
        }
        oriented[c] += k;
    }
    std::vector<Residue> out;
    if (f.is_zero()) return out;
    for (const auto& [c, k] : oriented) {
        if (k < -1) throw MultiplePoleError("delta_residues: pole of order " + std::to_string(-k));
        if (k >= 0) continue;
        // res_{v=c} f dv/v = (f * (1 - c/v)) at v = c
        FactoredScalar rest = g;
        for (const auto& [c2, k2] : oriented)
            if (c2 != c) rest.mul_factor(c2 * Monomial(v, -1), k2);
        out.push_back({c, Scalar::from_factored(evaluate_at(rest, v, c))});
    }
    return out;
}

bool delta_identity_holds(const FactoredScalar& f, Var v, int order) {
    SeriesTrunc plus = series_expand(f, v, Direction::at_infinity, order);
    SeriesTrunc minus = series_expand(f, v, Direction::at_zero, order);
    std::vector<Residue> res = delta_residues(f, v);
    for (int n = -order; n <= order; ++n) {
        Scalar lhs;
        if (n >= 0) lhs += plus.coeffs[static_cast<std::size_t>(n)];
        if (n <= 0) lhs -= minus.coeffs[static_cast<std::size_t>(-n)];
        Scalar rhs;
        for (const auto& r : res) rhs += r.residue * Scalar(r.support.pow(n));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

FactoredScalar random_pole_function(std::uint64_t seed, int factors) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<Monomial> args;
    std::set<Monomial> used;
    while (static_cast<int>(args.size()) < factors) {
        Monomial a = Monomial::qq(pick(-3, 3), pick(-3, 3)) * Monomial(Var::u, pick(0, 1));
        if (!a.is_one() && used.insert(a).second) args.push_back(a);
    }
    std::vector<int> exps;
    int total = 0;
    for (int i = 0; i < factors; ++i) total += exps.emplace_back(pick(0, 1) ? 1 : -1);
    // regular at z = 0 needs at least as many poles as zeros
    for (int& e : exps)
        if (total > 0 && e == 1) e = -1, total -= 2;
    FactoredScalar f(Rational(pick(1, 9) * (pick(0, 1) ? 1 : -1)));
    for (int i = 0; i < factors; ++i) f.mul_factor(args[static_cast<std::size_t>(i)] * Monomial(Var::z, -1), exps[static_cast<std::size_t>(i)]);
    return f;
}

}  // namespace qgl
