#include "qgl/field.hpp"

#include <random>

namespace qgl {

namespace {

Scalar expand_key(const FactoredScalar& key) {
    thread_local std::map<FactoredScalar, Scalar> cache;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (cache.size() > 200000) cache.clear();
    return cache.emplace(key, Scalar::from_factored(key)).first->second;
}

}  // namespace

SymbolicField::Elem SymbolicField::scalar(const Scalar& s) const {
    Elem e;
    if (!s.is_zero()) e.emplace(FactoredScalar(), s);
    return e;
}

SymbolicField::Elem SymbolicField::term(const FactoredScalar& coeff, const Monomial& mono) const {
    Elem e;
    if (coeff.is_zero()) return e;
    e.emplace(coeff.without_unit(), Scalar(LaurentPoly(coeff.mono() * mono, coeff.coeff())));
    return e;
}

void SymbolicField::add(Elem& acc, const Elem& x) const {
    for (const auto& [k, v] : x) {
        auto [it, inserted] = acc.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

SymbolicField::Elem SymbolicField::mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            FactoredScalar k = ka * kb;
            if (k.is_zero()) continue;
            if (k.degenerate() < 0) throw DivisionByZero("product has a (1-1) denominator");
            Scalar v = va * vb;
            if (v.is_zero()) continue;
            auto [it, inserted] = out.try_emplace(k, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

SymbolicField::Elem SymbolicField::neg(const Elem& a) const {
    Elem out;
    for (const auto& [k, v] : a) out.emplace(k, -v);
    return out;
}

bool SymbolicField::is_zero(const Elem& a) const {
    if (a.empty()) return true;
    if (a.size() == 1) return a.begin()->second.is_zero();
    // Multiply through by the common part so every key keeps nonnegative exponents.
    std::map<Monomial, int> low;
    for (const auto& [k, v] : a)
        for (const auto& [arg, e] : k.factors()) low.emplace(arg, e);
    for (auto& [arg, e] : low)
        for (const auto& [k, v] : a) {
            auto it = k.factors().find(arg);
            e = std::min(e, it == k.factors().end() ? 0 : it->second);
        }
    Scalar sum;
    for (const auto& [k, v] : a) {
        FactoredScalar shifted = k;
        for (const auto& [arg, e] : low)
            if (e != 0) shifted.mul_factor(arg, -e);
        sum += expand_key(shifted) * v;
    }
    return sum.is_zero();
}

Scalar SymbolicField::to_scalar(const Elem& a) const {
    Scalar sum;
    for (const auto& [k, v] : a) sum += expand_key(k) * v;
    return sum;
}

// ---------------------------------------------------------------- modular

ModularField::Elem ModularField::mulm(Elem a, Elem b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    Elem lo = static_cast<Elem>(p & kPrime);
    Elem hi = static_cast<Elem>(p >> 61);
    return addm(lo, hi);
}

ModularField::Elem ModularField::powm(Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
        if (e & 1u) r = mulm(r, a);
        a = mulm(a, a);
        e >>= 1u;
    }
    return r;
}

ModularField::Elem ModularField::invm(Elem a) {
    if (a == 0) throw DegenerateEvaluation("modular inverse of zero");
    return powm(a, kPrime - 2);
}

ModularField::ModularField(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> dist(2, kPrime - 2);
    for (int i = 0; i < kNumVars; ++i) {
        values_[i] = dist(rng);
        inverses_[i] = invm(values_[i]);
    }
}

ModularField::Elem ModularField::eval(const Monomial& m) const {
    Elem r = 1;
    for (int i = 0; i < kNumVars; ++i) {
        int e = m.exp(i);
        if (e > 0) r = mulm(r, powm(values_[i], static_cast<std::uint64_t>(e)));
        if (e < 0) r = mulm(r, powm(inverses_[i], static_cast<std::uint64_t>(-e)));
    }
    return r;
}

ModularField::Elem ModularField::eval(const Rational& q) const {
    auto red = [](std::int64_t v) {
        __int128 x = v % static_cast<__int128>(kPrime);
        if (x < 0) x += kPrime;
        return static_cast<Elem>(x);
    };
    return mulm(red(q.num()), invm(red(q.den())));
}

ModularField::Elem ModularField::eval(const LaurentPoly& p) const {
    Elem r = 0;
    for (const auto& t : p.terms()) r = addm(r, mulm(eval(t.coeff), eval(t.mono)));
    return r;
}

ModularField::Elem ModularField::scalar(const Scalar& s) const {
    Elem r = eval(s.num());
    for (const auto& [a, e] : s.den_atoms()) {
        Elem d = eval(a);
        if (d == 0) throw DegenerateEvaluation("denominator vanishes at the evaluation point");
        r = mulm(r, powm(invm(d), static_cast<std::uint64_t>(e)));
    }
    return r;
}

ModularField::Elem ModularField::term(const FactoredScalar& coeff, const Monomial& mono) const {
    if (coeff.is_zero()) return 0;
    if (coeff.degenerate() < 0) throw DivisionByZero("degenerate factor in a denominator");
    Elem r = mulm(eval(coeff.coeff()), eval(coeff.mono() * mono));
    for (const auto& [a, e] : coeff.factors()) {
        Elem f = addm(1, kPrime - eval(a));
        if (f == 0) {
            if (e < 0) throw DegenerateEvaluation("factor vanishes at the evaluation point");
            return 0;
        }
        r = mulm(r, e > 0 ? powm(f, static_cast<std::uint64_t>(e)) : powm(invm(f), static_cast<std::uint64_t>(-e)));
    }
    return r;
}

}  // namespace qgl
