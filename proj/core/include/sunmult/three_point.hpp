// three_point.hpp — tensor-product multiplicities of three weights by
// lattice-point counting over the triangle polytope.
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "sunmult/bounds.hpp"
#include "sunmult/triangle.hpp"
#include "sunmult/weights.hpp"

namespace sunmult {

// Summation order of the hexagon variables: anti-diagonals i+j = 2..r, with
// i descending inside each anti-diagonal — e.g. (1,1), (2,1), (1,2) at rank 3.
std::vector<VarId> three_point_order(int rank);

// Derives the nested bound system whose points are exactly the all-entries
// non-negative triangles of the coupling (hexagon coefficients relative to
// the initial triangle). Throws std::invalid_argument when the coupling
// parameters are non-integral.
BoundSystem three_point_bounds(const Weight& lambda, const Weight& mu, const Weight& nu);

// Number of couplings of lambda ⊗ mu ⊗ nu to the trivial representation.
// Zero when the weights fail the root-lattice test. Results are cached
// internally (thread-safe). Throws std::invalid_argument on rank mismatch or
// non-dominant input, std::overflow_error if the count exceeds 64 bits.
long long multiplicity3(const Weight& lambda, const Weight& mu, const Weight& nu);

// All hexagon-coefficient vectors of true triangles, in lexicographic order
// of the summation variables. Size equals multiplicity3; empty for inputs
// off the root lattice.
std::vector<CoefficientVector3> enumerate3(const Weight& lambda, const Weight& mu,
                                           const Weight& nu);

// Multiplicity of nu inside lambda ⊗ mu: multiplicity3 with the third weight
// conjugated.
long long tensor_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu);

// Reference count by scanning the full coefficient box [-B, B]^{H_r} with
// B = max |initial entry| + total label sum, testing every entry of every
// candidate. Slow; exists to validate the derived bounds.
long long multiplicity3_box(const Weight& lambda, const Weight& mu, const Weight& nu);

}  // namespace sunmult
