// oracle.hpp — independent character-theoretic ground truth: tensor product
// decomposition by the Littlewood–Richardson rule and Weyl dimensions.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <vector>

#include "sunmult/weights.hpp"

namespace sunmult {

// Decomposition of a tensor product into irreducibles:
// dominant weight -> multiplicity (> 0). The sum of mult·dim over the map
// equals the product of the constituent dimensions.
using Decomposition = std::map<Weight, long long>;

// Decomposes M_lambda ⊗ M_mu for su(r+1) via the Littlewood–Richardson rule
// on the associated partitions (weight ↦ partition with row i = Σ_{j≥i} λ_j),
// dropping shapes deeper than r+1 rows and reducing full columns of height
// r+1. Sign-free by construction; results are cached internally
// (thread-safe). Throws std::invalid_argument on rank mismatch or
// non-dominant input.
Decomposition lr_decompose(const Weight& lambda, const Weight& mu);

// Multiplicity of the trivial representation in the product of all given
// weights (≥ 2 weights, equal ranks, dominant). Computed by folding all but
// the last factor and reading off the coefficient of the conjugate of the
// last one.
long long singlet_count(const std::vector<Weight>& ws);

// Dimension of the irreducible with highest weight w (Weyl formula), exact
// integer arithmetic. Throws std::overflow_error if the result does not fit
// in 64 bits.
long long dim(const Weight& w);

}  // namespace sunmult
