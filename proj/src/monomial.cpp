#include "qgl/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace qgl {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {
    "q1", "q3", "u", "z", "p", "q", "t", "w", "x1", "x2", "x3", "x4", "u1", "u2", "u3", "u4",
};
}

std::string_view var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

void Monomial::set(Var v, int e) {
    if (e > INT16_MAX || e < INT16_MIN) throw std::overflow_error("Monomial: exponent overflow");
    exps_[static_cast<int>(v)] = static_cast<std::int16_t>(e);
}

bool Monomial::is_one() const {
    for (auto e : exps_)
        if (e != 0) return false;
    return true;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    for (int i = 0; i < kNumVars; ++i) {
        int e = exps_[i] + o.exps_[i];
        if (e > INT16_MAX || e < INT16_MIN) throw std::overflow_error("Monomial: exponent overflow");
        exps_[i] = static_cast<std::int16_t>(e);
    }
    return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    r *= o;
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.exps_[i] = static_cast<std::int16_t>(-exps_[i]);
    return r;
}

Monomial Monomial::pow(int e) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
        long v = static_cast<long>(exps_[i]) * e;
        if (v > INT16_MAX || v < INT16_MIN) throw std::overflow_error("Monomial: exponent overflow");
        r.exps_[i] = static_cast<std::int16_t>(v);
    }
    return r;
}

Monomial Monomial::root(int d) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
        if (exps_[i] % d != 0) throw std::invalid_argument("Monomial::root: exponent not divisible");
        r.exps_[i] = static_cast<std::int16_t>(exps_[i] / d);
    }
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r = *this;
    r.exps_[static_cast<int>(v)] = 0;
    return r;
}

int Monomial::content() const {
    int g = 0;
    for (auto e : exps_) g = std::gcd(g, static_cast<int>(e));
    return g;
}

bool Monomial::lex_positive() const {
    for (auto e : exps_)
        if (e != 0) return e > 0;
    return false;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= static_cast<std::uint16_t>(e);
        h *= 1099511628211ull;
    }
    return h;
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kNames[i];
        out += '^';
        out += std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

MonomialMap::MonomialMap() {
    for (int i = 0; i < kNumVars; ++i) images_[i] = Monomial(static_cast<Var>(i));
}

MonomialMap& MonomialMap::set(Var v, const Monomial& image) {
    images_[static_cast<int>(v)] = image;
    return *this;
}

Monomial MonomialMap::apply(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
        if (m.exp(i) != 0) r *= images_[i].pow(m.exp(i));
    return r;
}

}  // namespace qgl
