#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace qgl {

/// Exact rational number with 64-bit numerator and denominator.
///
/// All arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error when a reduced result does not fit in 64 bits.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of numeric literals
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);

    Rational inverse() const;
    Rational pow(int e) const;

    /// `n` or `n/d`.
    std::string to_string() const;
    static Rational parse(const std::string& text);

    std::size_t hash() const {
        return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
    }

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace qgl
