// n_point.hpp — singlet multiplicities for arbitrarily many weights via
// string-like channel folding, cross-checked by direct glued-chain counting
// at small rank.
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "sunmult/triangle.hpp"
#include "sunmult/weights.hpp"

namespace sunmult {

// A coupling of N >= 3 dominant weights of one rank.
struct CouplingQuery {
  int rank = 0;
  std::vector<Weight> weights;

  int points() const { return static_cast<int>(weights.size()); }
};

// Multiplicity of the trivial representation in the product of all weights.
// Zero off the root lattice. Three and four weights delegate to the dedicated
// counters; more weights fold one intermediate channel weight at a time:
// Σ_ρ (multiplicity of ρ in λ¹⊗λ²) · multiplicity_n(ρ, λ³, …). Throws
// std::invalid_argument on malformed queries, std::overflow_error past 64
// bits.
long long multiplicity_n(const CouplingQuery& q);

// The distinguished chain of N-2 triangles for the query: triangle 1 couples
// (λ¹, λ², λ³+…+λᴺ); triangle a >= 2 couples (λ³+…+λ^{N+1-a}, λ^{N+2-a},
// conjugate of their sum); gluing 1 joins third faces, later gluings join
// first face to third face. Throws std::invalid_argument when the weights
// fail the root-lattice test.
GluedDiagram initial_chain(const CouplingQuery& q);

// Counts true glued chains directly by enumerating all (N-2)·H_r + (N-3)·r
// coefficient vectors inside a finite search box and validating every entry.
// Restricted to N <= 6 and rank <= 2 (throws std::invalid_argument beyond);
// throws std::logic_error if a true chain touches the box boundary.
long long diagram_count_n(const CouplingQuery& q);

}  // namespace sunmult
