#include "qgl/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace qgl {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.push_back({m, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    p.combine_sorted();
    return p;
}

LaurentPoly LaurentPoly::one_minus(const Monomial& m) {
    return LaurentPoly(Rational(1)) - LaurentPoly(m);
}

void LaurentPoly::combine_sorted() {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

Rational LaurentPoly::constant_term() const { return coefficient(Monomial()); }

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.mono < k; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

Monomial LaurentPoly::min_exponents() const {
    Monomial r;
    bool first = true;
    for (const auto& t : terms_) {
        for (int i = 0; i < kNumVars; ++i) {
            int e = t.mono.exp(i);
            if (first || e < r.exp(i)) r.set(static_cast<Var>(i), e);
        }
        first = false;
    }
    return r;
}

Monomial LaurentPoly::max_exponents() const {
    Monomial r;
    bool first = true;
    for (const auto& t : terms_) {
        for (int i = 0; i < kNumVars; ++i) {
            int e = t.mono.exp(i);
            if (first || e > r.exp(i)) r.set(static_cast<Var>(i), e);
        }
        first = false;
    }
    return r;
}

bool LaurentPoly::involves(Var v) const {
    for (const auto& t : terms_)
        if (t.mono[v] != 0) return true;
    return false;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->mono < a->mono) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (!c.is_zero()) out.push_back({a->mono, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1) return b.times(a.terms_[0].mono).scaled(a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.times(b.terms_[0].mono).scaled(b.terms_[0].coeff);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc[x.mono * y.mono] += x.coeff * y.coeff;
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, c});
    std::sort(terms.begin(), terms.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) { return x.mono < y.mono; });
    LaurentPoly r;
    r.terms_ = std::move(terms);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.mono *= m;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc(Rational(1));
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute(const MonomialMap& map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({map.apply(t.mono), t.coeff});
    return from_terms(std::move(out));
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
    for (int i = 0; i < kNumVars; ++i)
        if (d.exp(i) > m.exp(i)) return false;
    return true;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    if (b.size() == 1) {
        return a.times(b.terms_[0].mono.inverse()).scaled(b.terms_[0].coeff.inverse());
    }
    // Shift both into the polynomial ring; b' then has no monomial factor, so
    // Laurent divisibility equals polynomial divisibility.
    Monomial sa = a.min_exponents().inverse();
    Monomial sb = b.min_exponents().inverse();
    LaurentPoly bp = b.times(sb);
    const Term& lb = bp.terms_.back();
    std::map<Monomial, Rational> rem;
    for (const auto& t : a.terms_) rem.emplace(t.mono * sa, t.coeff);
    std::vector<Term> quot;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        if (!divides(lb.mono, it->first)) return std::nullopt;
        Monomial qm = it->first / lb.mono;
        Rational qc = it->second / lb.coeff;
        quot.push_back({qm, qc});
        for (const auto& t : bp.terms_) {
            Monomial m = t.mono * qm;
            auto [pos, inserted] = rem.try_emplace(m, -(t.coeff * qc));
            if (!inserted) {
                pos->second -= t.coeff * qc;
                if (pos->second.is_zero()) rem.erase(pos);
            }
        }
    }
    // a' = b' * q'  =>  a = b * q' * sb / sa
    return from_terms(std::move(quot)).times(sb / sa);
}

std::map<Monomial, LaurentPoly> LaurentPoly::group_by(const std::vector<Var>& vars) const {
    std::map<Monomial, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        Monomial key;
        Monomial rest = t.mono;
        for (Var v : vars) {
            key.set(v, t.mono[v]);
            rest.set(v, 0);
        }
        buckets[key].push_back({rest, t.coeff});
    }
    std::map<Monomial, LaurentPoly> out;
    for (auto& [k, ts] : buckets) out.emplace(k, from_terms(std::move(ts)));
    return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
            if (x.mono != y.mono) return x.mono < y.mono;
            return x.coeff < y.coeff;
        });
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += '+';
        out += t.coeff.to_string();
        if (!t.mono.is_one()) {
            out += '*';
            out += t.mono.to_string();
        }
    }
    return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("LaurentPoly::parse: empty input");
    std::vector<Term> terms;
    std::size_t i = 0;
    auto parse_int = [&](std::size_t& j) {
        std::size_t start = j;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == start || (j == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("LaurentPoly::parse: expected integer in '" + s + "'");
        return std::stoll(s.substr(start, j - start));
    };
    while (i < s.size()) {
        Rational sign(1);
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        Rational coeff(1);
        Monomial mono;
        bool any = false;
        while (true) {
            if (i >= s.size()) break;
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::int64_t n = parse_int(i);
                std::int64_t d = 1;
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    d = parse_int(i);
                }
                coeff *= Rational(n, d);
            } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
                std::size_t start = i;
                while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
                std::string name = s.substr(start, i - start);
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = static_cast<int>(parse_int(i));
                }
                if (name == "q2") {
                    mono *= Monomial::q2(e);
                } else {
                    auto v = var_from_name(name);
                    if (!v) throw std::invalid_argument("LaurentPoly::parse: unknown variable " + name);
                    mono *= Monomial(*v, e);
                }
            } else {
                throw std::invalid_argument("LaurentPoly::parse: unexpected character in '" + s + "'");
            }
            any = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) throw std::invalid_argument("LaurentPoly::parse: dangling sign in '" + s + "'");
        terms.push_back({mono, sign * coeff});
    }
    return from_terms(std::move(terms));
}

CanonicalForm canonicalize(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("canonicalize: zero polynomial");
    Monomial shift = p.min_exponents();
    std::int64_t den_lcm = 1;
    std::int64_t num_gcd = 0;
    for (const auto& t : p.terms()) {
        std::int64_t d = t.coeff.den();
        den_lcm = den_lcm / gcd64(den_lcm, d) * d;
        num_gcd = gcd64(num_gcd, t.coeff.num());
    }
    Rational unit(num_gcd, den_lcm);
    if (p.terms().front().coeff.sign() < 0) unit = -unit;
    LaurentPoly canon = p.times(shift.inverse()).scaled(unit.inverse());
    return {unit, shift, std::move(canon)};
}

}  // namespace qgl
