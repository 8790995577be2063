#include "qgl/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace qgl {

namespace {

LaurentPoly expand_atoms(const AtomSet& atoms) {
    LaurentPoly r(Rational(1));
    for (const auto& [a, e] : atoms) r *= a.pow(static_cast<unsigned>(e));
    return r;
}

LaurentPoly unit_poly(const Rational& c, const Monomial& m) { return LaurentPoly(m, c); }

void merge_into(AtomFactorization& acc, const AtomFactorization& f, int exp) {
    acc.unit_coeff *= f.unit_coeff.pow(exp);
    acc.unit_mono *= f.unit_mono.pow(exp);
    for (const auto& [a, e] : f.atoms) {
        int& slot = acc.atoms[a];
        slot += e * exp;
        if (slot == 0) acc.atoms.erase(a);
    }
}

LaurentPoly poly_in(const Monomial& x, const std::vector<std::int64_t>& coeffs) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) terms.push_back({x.pow(static_cast<int>(j)), Rational(coeffs[j])});
    return LaurentPoly::from_terms(std::move(terms));
}

// 1 + y = (1 - y^2) / (1 - y)
AtomFactorization one_plus_atoms(const Monomial& y) {
    AtomFactorization r;
    merge_into(r, binomial_atoms(y.pow(2)), 1);
    merge_into(r, binomial_atoms(y), -1);
    return r;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic(int d) {
    thread_local std::unordered_map<int, std::vector<std::int64_t>> cache;
    if (d < 1) throw std::invalid_argument("cyclotomic: order must be positive");
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // x^d - 1 divided by Phi_e for every proper divisor e
    std::vector<std::int64_t> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        const auto& div = cyclotomic(e);
        std::size_t dn = div.size() - 1;
        std::vector<std::int64_t> q(p.size() - dn, 0);
        for (std::size_t k = p.size(); k-- > dn;) {
            std::int64_t c = p[k];  // divisor is monic
            q[k - dn] = c;
            for (std::size_t j = 0; j <= dn; ++j) p[k - dn + j] -= c * div[j];
        }
        p = std::move(q);
    }
    return cache.emplace(d, std::move(p)).first->second;
}

AtomFactorization binomial_atoms(const Monomial& m) {
    if (m.is_one()) throw DivisionByZero("binomial_atoms: factor (1-1)");
    thread_local std::unordered_map<Monomial, AtomFactorization, MonomialHash> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    int d = std::abs(m.content());
    Monomial x = m.root(d);
    AtomFactorization r;
    if (x.lex_positive()) {
        r.unit_coeff = Rational(-1);  // 1 - x^d = -prod Phi_e(x)
    } else {
        x = x.inverse();  // 1 - x^-d = x^-d prod Phi_e(x)
        r.unit_mono = x.pow(-d);
    }
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        CanonicalForm cf = canonicalize(poly_in(x, cyclotomic(e)));
        r.unit_coeff *= cf.unit_coeff;
        r.unit_mono *= cf.unit_mono;
        r.atoms[cf.canonical] += 1;
    }
    cache.emplace(m, r);
    return r;
}

AtomFactorization split_atoms(const LaurentPoly& p) {
    if (p.is_zero()) throw DivisionByZero("division by the zero polynomial");
    CanonicalForm cf = canonicalize(p);
    AtomFactorization r;
    r.unit_coeff = cf.unit_coeff;
    r.unit_mono = cf.unit_mono;
    LaurentPoly rest = std::move(cf.canonical);
    if (rest.size() == 1) return r;
    if (rest.size() == 2) {
        const auto& lo = rest.terms()[0];
        const auto& hi = rest.terms()[1];
        Monomial y = hi.mono / lo.mono;
        if (hi.coeff == -lo.coeff) {
            // lo.c*m1 + hi.c*m2 = lo.c*m1*(1 - y)
            r.unit_coeff *= lo.coeff;
            r.unit_mono *= lo.mono;
            merge_into(r, binomial_atoms(y), 1);
            return r;
        }
        if (hi.coeff == lo.coeff) {
            r.unit_coeff *= lo.coeff;
            r.unit_mono *= lo.mono;
            merge_into(r, one_plus_atoms(y), 1);
            return r;
        }
        r.atoms[rest] += 1;
        return r;
    }
    // Trial division by binomial factors suggested by term ratios.
    constexpr std::size_t kMaxTermsForSearch = 48;
    if (rest.size() <= kMaxTermsForSearch) {
        std::map<Monomial, int> candidates;  // primitive root -> lcm of contents seen
        const auto& ts = rest.terms();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                Monomial ratio = ts[j].mono / ts[i].mono;
                int d = std::abs(ratio.content());
                Monomial x = ratio.root(d);
                if (!x.lex_positive()) x = x.inverse();
                int& slot = candidates[x];
                slot = slot == 0 ? d : std::lcm(slot, d);
                if (slot > 24) slot = d;
            }
        }
        for (const auto& [x, dmax] : candidates) {
            for (int e = 1; e <= dmax; ++e) {
                if (dmax % e != 0) continue;
                CanonicalForm atom = canonicalize(poly_in(x, cyclotomic(e)));
                if (atom.canonical.size() > rest.size()) continue;
                while (rest.size() > 1) {
                    auto q = LaurentPoly::divide_exact(rest, atom.canonical);
                    if (!q) break;
                    CanonicalForm qc = canonicalize(*q);
                    r.unit_coeff *= qc.unit_coeff;
                    r.unit_mono *= qc.unit_mono;
                    r.atoms[atom.canonical] += 1;
                    rest = std::move(qc.canonical);
                }
            }
            if (rest.size() == 1) break;
        }
    }
    if (rest.size() > 1) {
        if (rest.size() == 2) {
            AtomFactorization tail = split_atoms(rest);
            merge_into(r, tail, 1);
        } else {
            r.atoms[rest] += 1;
        }
    }
    return r;
}

// ---------------------------------------------------------------- FactoredScalar

FactoredScalar FactoredScalar::factor(const Monomial& arg, int exp) {
    FactoredScalar f;
    f.mul_factor(arg, exp);
    return f;
}

FactoredScalar& FactoredScalar::mul_factor(const Monomial& arg, int exp) {
    if (exp == 0) return *this;
    if (arg.is_one()) {
        degenerate_ += exp;
        return *this;
    }
    Monomial a = arg;
    if (!a.lex_positive()) {
        // 1 - a = -a (1 - a^-1)
        if (exp % 2 != 0) coeff_ = -coeff_;
        mono_ *= a.pow(exp);
        a = a.inverse();
    }
    int& slot = factors_[a];
    slot += exp;
    if (slot == 0) factors_.erase(a);
    return *this;
}

FactoredScalar& FactoredScalar::operator*=(const FactoredScalar& o) {
    coeff_ *= o.coeff_;
    mono_ *= o.mono_;
    degenerate_ += o.degenerate_;
    for (const auto& [a, e] : o.factors_) {
        int& slot = factors_[a];
        slot += e;
        if (slot == 0) factors_.erase(a);
    }
    return *this;
}

FactoredScalar FactoredScalar::inverse() const {
    if (coeff_.is_zero()) throw DivisionByZero("FactoredScalar: inverse of zero");
    FactoredScalar r;
    r.coeff_ = coeff_.inverse();
    r.mono_ = mono_.inverse();
    r.degenerate_ = -degenerate_;
    for (const auto& [a, e] : factors_) r.factors_.emplace(a, -e);
    return r;
}

FactoredScalar FactoredScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FactoredScalar r;
    r.coeff_ = coeff_.pow(e);
    r.mono_ = mono_.pow(e);
    r.degenerate_ = degenerate_ * e;
    if (e != 0)
        for (const auto& [a, x] : factors_) r.factors_.emplace(a, x * e);
    return r;
}

FactoredScalar FactoredScalar::times(const Rational& c, const Monomial& m) const {
    FactoredScalar r = *this;
    r.coeff_ *= c;
    r.mono_ *= m;
    return r;
}

FactoredScalar FactoredScalar::substitute(const MonomialMap& map) const {
    FactoredScalar r(coeff_, map.apply(mono_));
    r.degenerate_ = degenerate_;
    for (const auto& [a, e] : factors_) r.mul_factor(map.apply(a), e);
    return r;
}

FactoredScalar FactoredScalar::without_unit() const {
    FactoredScalar r = *this;
    r.coeff_ = Rational(1);
    r.mono_ = Monomial();
    return r;
}

bool operator<(const FactoredScalar& a, const FactoredScalar& b) {
    return std::tie(a.factors_, a.degenerate_, a.coeff_, a.mono_) <
           std::tie(b.factors_, b.degenerate_, b.coeff_, b.mono_);
}

std::string FactoredScalar::to_string() const {
    std::string out = coeff_.to_string();
    if (!mono_.is_one()) out += "*" + mono_.to_string();
    if (degenerate_ != 0) out += "*(1-1)^" + std::to_string(degenerate_);
    for (const auto& [a, e] : factors_) out += "*(1-" + a.to_string() + ")^" + std::to_string(e);
    return out;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_factored(const FactoredScalar& f) {
    if (f.coeff().is_zero() || f.degenerate() > 0) return Scalar();
    if (f.degenerate() < 0) throw DivisionByZero("expand_factored: degenerate factor (1-1) in denominator");
    AtomFactorization net;
    net.unit_coeff = f.coeff();
    net.unit_mono = f.mono();
    for (const auto& [a, e] : f.factors()) merge_into(net, binomial_atoms(a), e);
    Scalar s;
    LaurentPoly num = unit_poly(net.unit_coeff, net.unit_mono);
    for (const auto& [a, e] : net.atoms) {
        if (e > 0)
            num *= a.pow(static_cast<unsigned>(e));
        else
            s.den_.emplace(a, -e);
    }
    s.num_ = std::move(num);
    return s;
}

Scalar Scalar::quotient(const LaurentPoly& num, const LaurentPoly& den) {
    return Scalar(num) / Scalar(den);
}

LaurentPoly Scalar::den() const { return expand_atoms(den_); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        AtomSet lcm = den_;
        for (const auto& [a, e] : o.den_) {
            int& slot = lcm[a];
            slot = std::max(slot, e);
        }
        AtomSet mine, theirs;
        for (const auto& [a, e] : lcm) {
            auto i = den_.find(a);
            int ea = i == den_.end() ? 0 : i->second;
            auto j = o.den_.find(a);
            int eb = j == o.den_.end() ? 0 : j->second;
            if (e > ea) mine.emplace(a, e - ea);
            if (e > eb) theirs.emplace(a, e - eb);
        }
        num_ = num_ * expand_atoms(mine) + o.num_ * expand_atoms(theirs);
        den_ = std::move(lcm);
    }
    if (num_.is_zero()) den_.clear();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ *= o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [a, e] : o.den_) den_[a] += e;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("Scalar: division by zero");
    AtomFactorization f = split_atoms(o.num_);
    num_ = num_.scaled(f.unit_coeff.inverse()).times(f.unit_mono.inverse()) * expand_atoms(o.den_);
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [a, e] : f.atoms) den_[a] += e;
    return *this;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return (a - b).is_zero();
}

Scalar Scalar::cancelled() const {
    Scalar r;
    r.num_ = num_;
    if (num_.is_zero()) return r;
    for (const auto& [a, e] : den_) {
        int left = e;
        while (left > 0) {
            auto q = LaurentPoly::divide_exact(r.num_, a);
            if (!q) break;
            r.num_ = std::move(*q);
            --left;
        }
        if (left > 0) r.den_.emplace(a, left);
    }
    return r;
}

Scalar Scalar::substitute(const MonomialMap& map) const {
    Scalar r(num_.substitute(map));
    if (r.num_.is_zero()) return r;
    for (const auto& [a, e] : den_) {
        AtomFactorization f = split_atoms(a.substitute(map));
        r.num_ = r.num_.scaled(f.unit_coeff.pow(-e)).times(f.unit_mono.pow(-e));
        for (const auto& [b, x] : f.atoms) r.den_[b] += x * e;
    }
    return r;
}

std::string Scalar::to_string() const {
    Scalar c = cancelled();
    return "(" + c.num_.to_string() + ")/(" + c.den().to_string() + ")";
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto split = s.find(")/(");
    if (!s.empty() && s.front() == '(' && s.back() == ')' && split != std::string::npos) {
        LaurentPoly n = LaurentPoly::parse(s.substr(1, split - 1));
        LaurentPoly d = LaurentPoly::parse(s.substr(split + 3, s.size() - split - 4));
        return quotient(n, d);
    }
    return Scalar(LaurentPoly::parse(s));
}

}  // namespace qgl
