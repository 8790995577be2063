#pragma once

#include <vector>

#include "qgl/relations.hpp"
#include "qgl/reps.hpp"

namespace qgl {

/// Compares e0, f0, psi+_1 and psi-_-1 on W^N(1) against the Macdonald
/// oracles for every partition with at most N parts and weight <= max_weight.
Report check_identification(int n, int max_weight);

/// [psi+_1, e_m] = c+ (s1 - s2) e_{m+1}, [psi-_-1, e_m] = -c- (s1 - s2) e_{m-1},
/// [psi+_1, f_m] = -c+ (s1 - s2) f_{m+1}, [psi-_-1, f_m] = c- (s1 - s2) f_{m-1}
/// with s1 = q1+q2+q3, s2 = q1^-1+q2^-1+q3^-1 and c+- the level. Also rebuilds
/// e_m and f_m from e_0 and f_0 through these commutators.
Report check_mode_recursion(const ModulePtr& mod, const std::vector<Label>& basis, int window);

/// d_{lambda,i} = c_{lambda+1_i} / c_lambda for a nonnegative partition.
FactoredScalar c_ratio(const std::vector<int>& lambda, int i);
/// d_{lambda+1_i,k} d_{lambda,i} == d_{lambda+1_k,i} d_{lambda,k}, with every
/// factor taken from the product formula, so the intermediate sequences need
/// not be partitions.
bool cocycle_check(const std::vector<int>& lambda, int i, int k);
/// Cocycle identity for every partition of weight <= max_weight and every
/// pair of rows i < k <= length + 2, plus the single-box normalization.
Report check_cocycles(int max_weight);

}  // namespace qgl
