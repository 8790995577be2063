#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace qgl {

/// Fixed variable registry. Every coefficient field in the library is a
/// subfield of Q(q1, q3, u, z, p, q, t, w, x1..x4, u1..u4); q2 is never a
/// variable of its own and is rewritten as q1^-1*q3^-1 on input.
enum class Var : std::uint8_t {
    q1 = 0, q3, u, z, p, q, t, w,
    x1, x2, x3, x4,
    u1, u2, u3, u4,
};

inline constexpr int kNumVars = 16;
inline constexpr int kMaxX = 4;
inline constexpr int kMaxU = 4;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
inline Var x_var(int i) { return static_cast<Var>(static_cast<int>(Var::x1) + i - 1); }
inline Var u_var(int i) { return static_cast<Var>(static_cast<int>(Var::u1) + i - 1); }

/// Laurent monomial: integer exponent per registry variable.
class Monomial {
public:
    using Exponents = std::array<std::int16_t, kNumVars>;

    Monomial() { exps_.fill(0); }
    explicit Monomial(Var v, int e = 1) : Monomial() { set(v, e); }

    static Monomial one() { return Monomial(); }
    /// q2 = q1^-1 q3^-1.
    static Monomial q2(int e = 1) {
        Monomial m;
        m.set(Var::q1, -e);
        m.set(Var::q3, -e);
        return m;
    }
    /// q1^a q3^b.
    static Monomial qq(int a, int b) {
        Monomial m;
        m.set(Var::q1, a);
        m.set(Var::q3, b);
        return m;
    }

    int operator[](Var v) const { return exps_[static_cast<int>(v)]; }
    int exp(int i) const { return exps_[i]; }
    void set(Var v, int e);
    const Exponents& exponents() const { return exps_; }

    bool is_one() const;
    Monomial operator*(const Monomial& o) const;
    Monomial& operator*=(const Monomial& o);
    Monomial operator/(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int e) const;
    /// Exact d-th root; every exponent must be divisible by d.
    Monomial root(int d) const;

    /// Copy with the exponent of `v` set to zero.
    Monomial without(Var v) const;
    /// gcd of all exponents (0 for the unit monomial).
    int content() const;
    /// Lexicographically positive: first nonzero exponent is > 0.
    bool lex_positive() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

    std::size_t hash() const;

    /// `q1^2*q3^-1*u^1`; the unit monomial renders as "1".
    std::string to_string() const;

private:
    Exponents exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Multiplicative substitution: each variable is sent to a monomial.
class MonomialMap {
public:
    MonomialMap();
    MonomialMap& set(Var v, const Monomial& image);
    Monomial apply(const Monomial& m) const;
    const Monomial& image(Var v) const { return images_[static_cast<int>(v)]; }

private:
    std::array<Monomial, kNumVars> images_;
};

}  // namespace qgl
