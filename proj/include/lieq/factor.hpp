#pragma once

#include <utility>
#include <vector>

#include "lieq/poly.hpp"

namespace lieq {

/// Yun's squarefree decomposition of a nonzero polynomial:
/// monic(f) = prod out[i].first ^ out[i].second, the parts pairwise coprime
/// squarefree monic.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Full factorization over Q into monic irreducibles with multiplicities
/// (Zassenhaus: factor mod p, linear Hensel lift, subset recombination).
/// Deterministic: factors sorted by (degree, coefficient sequence).
std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f);

}  // namespace lieq
