#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qgl/scalar.hpp"

namespace qgl {

enum class Direction { at_infinity, at_zero };

/// Truncated expansion of a rational function in one variable v.
/// at_infinity: coeffs[m] multiplies v^-m; at_zero: coeffs[m] multiplies v^m.
struct SeriesTrunc {
    Direction direction = Direction::at_infinity;
    int order = 0;
    std::vector<Scalar> coeffs;
};

/// Expands f around v = infinity or v = 0 up to order K. Factors must involve
/// v through a single power; throws QglError if f is singular at the point.
SeriesTrunc series_expand(const FactoredScalar& f, Var v, Direction dir, int order);

/// f with v replaced by the monomial `at`.
FactoredScalar evaluate_at(const FactoredScalar& f, Var v, const Monomial& at);

struct Residue {
    Monomial support;
    Scalar residue;
};

/// Residues of f(v) dv/v at its poles, for f whose v-dependent factors are
/// (1 - c v^{+-1})^k. Throws MultiplePoleError for poles of order > 1.
std::vector<Residue> delta_residues(const FactoredScalar& f, Var v);

/// Checks f^+_n - f^-_n = sum_t res_t * support_t^n for |n| <= order, where
/// f^+ and f^- are the expansions at infinity and zero.
bool delta_identity_holds(const FactoredScalar& f, Var v, int order);

/// Seeded random c * prod (1 - a_i/z)^{+-1} with `factors` distinct arguments
/// a_i in q1, q3, u and no more zeros than poles: a test source for the
/// delta identity.
FactoredScalar random_pole_function(std::uint64_t seed, int factors);

}  // namespace qgl
