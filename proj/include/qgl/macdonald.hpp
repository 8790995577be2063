#pragma once

#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "qgl/scalar.hpp"

namespace qgl {

/// Symmetric Laurent polynomial in x1..xN over Q(q, t), in the monomial basis.
/// Keys are weakly decreasing exponent vectors of length N, largest first.
struct SymFunc {
    using Terms = std::map<std::vector<int>, Scalar, std::greater<std::vector<int>>>;

    int n = 0;
    Terms terms;

    explicit SymFunc(int vars = 0) : n(vars) {}

    bool is_zero() const { return terms.empty(); }
    /// Adds c * m_shape, dropping the entry if it cancels.
    void add(const std::vector<int>& shape, const Scalar& c);
    void add(const SymFunc& other, const Scalar& c = Scalar(1));
    Scalar coefficient(const std::vector<int>& shape) const;
    /// Full expansion keyed by x-monomial.
    std::map<Monomial, Scalar> expand() const;

    friend bool operator==(const SymFunc& a, const SymFunc& b);
    nlohmann::json to_json() const;
    std::string to_string() const;
};

/// q -> q1, t -> q3^-1.
MonomialMap macdonald_bridge();

/// D^1_N (sign +1) or D^1_N(q^-1, t^-1) (sign -1).
SymFunc apply_macdonald_D(const SymFunc& f, int sign);
/// Sum_i q^{+-lambda_i} t^{+-(N-i)}.
Scalar d1_eigenvalue(const std::vector<int>& lambda, int n, int sign);
/// Monic dominance-triangular eigenvector of D^1_N; lambda nonnegative.
SymFunc macdonald_P(const std::vector<int>& lambda, int n);
/// Shifted by (x1...xN)^{lambda_N} for shapes with negative entries.
SymFunc macdonald_P_laurent(const std::vector<int>& lambda, int n);

/// Coefficients of (x1 + ... + xN) P_lambda (sign +1) or of
/// (x1^-1 + ... + xN^-1) P_lambda (sign -1) in the P basis.
std::map<std::vector<int>, Scalar> pieri_e1(const std::vector<int>& lambda, int n, int sign = 1);
/// Expansion of a symmetric function in the P basis.
std::map<std::vector<int>, Scalar> to_p_basis(SymFunc f);

/// Wheel condition for (k, r) after the bridge and the resonance map.
bool wheel_vanishes(const SymFunc& f, int k, int r);

}  // namespace qgl
