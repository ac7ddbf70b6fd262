// four_point.hpp — tensor-product multiplicities of four weights by
// lattice-point counting over glued-pair polytopes, with explicit low-rank
// closed sums, channel decomposition, and non-vanishing cones.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "sunmult/bounds.hpp"
#include "sunmult/triangle.hpp"
#include "sunmult/weights.hpp"

namespace sunmult {

// Summation order: first triangle's hexagons (anti-diagonals ascending, i
// descending), then gluing coefficients g_r..g_1, then the second triangle's
// hexagons in exactly reversed order.
std::vector<VarId> four_point_order(int rank);

// Derives the nested bound system whose points are the all-entries
// non-negative glued pairs for (lambda, mu, nu, sigma). Throws
// std::invalid_argument when the weights fail the root-lattice test.
BoundSystem four_point_bounds(const Weight& lambda, const Weight& mu, const Weight& nu,
                              const Weight& sigma);

// Number of couplings of lambda ⊗ mu ⊗ nu ⊗ sigma to the trivial
// representation. Zero off the root lattice. Throws std::invalid_argument on
// rank mismatch or non-dominant input.
long long multiplicity4(const Weight& lambda, const Weight& mu, const Weight& nu,
                        const Weight& sigma);

// Closed-form rank-1 count: zero for odd label sums, otherwise the length of
// the interval [max{0, S-λ-μ}, min{S-λ, S-μ, ν, σ}] with S the half-sum.
long long multiplicity4_su2(long long lambda1, long long mu1, long long nu1, long long sigma1);

// Explicit rank-2 four-fold nested sum (independent transcription; must
// agree with multiplicity4).
long long multiplicity4_su3(const Weight& lambda, const Weight& mu, const Weight& nu,
                            const Weight& sigma);

// Explicit rank-3 nine-fold nested sum (independent transcription; must
// agree with multiplicity4).
long long multiplicity4_su4(const Weight& lambda, const Weight& mu, const Weight& nu,
                            const Weight& sigma);

// One intermediate-weight term of the channel decomposition: `rho` runs over
// the dominant weights of lambda ⊗ mu; left/right are the three-point
// multiplicities of the two couplings it joins.
struct ChannelTerm {
  Weight rho;
  long long left = 0;
  long long right = 0;
  long long product = 0;
};

struct Channel4Result {
  long long total = 0;
  std::vector<ChannelTerm> terms;  // nonzero terms only, sorted by rho
};

// Four-point multiplicity as Σ_ρ (multiplicity of ρ in λ⊗μ) · (singlet count
// of ρ⊗ν⊗σ); independent of the polytope route.
Channel4Result channel_decompose4(const Weight& lambda, const Weight& mu, const Weight& nu,
                                  const Weight& sigma);

// All coefficient vectors of true glued pairs, in lexicographic order of the
// summation variables. Size equals multiplicity4.
std::vector<CoefficientVector4> enumerate4(const Weight& lambda, const Weight& mu,
                                           const Weight& nu, const Weight& sigma);

// Reference count scanning the coefficient box [-B, B]^{r²} with B =
// max |initial entry| + total label sum. `pruned` skips provably empty
// subtrees (identical predicate); the dumb scan is exponential and only
// usable at rank 1 or tiny rank-2 inputs.
long long multiplicity4_box(const Weight& lambda, const Weight& mu, const Weight& nu,
                            const Weight& sigma, bool pruned = true);

// Non-vanishing cone report. `violated` lists the failed conditions;
// membership means none failed. S values are reported exactly as numerators
// over the fixed denominator (2 for rank 1, 3 for rank 2).
struct ConeReport {
  bool member = false;
  std::vector<std::string> violated;
  std::vector<long long> S_numerators;
  long long S_denominator = 1;
};

// Rank-1 cone: S integral and 0 ≤ λ, μ, ν, σ, S-λ, S-μ, S-ν, S-σ.
// Membership is equivalent to multiplicity4 > 0.
ConeReport cone_su2(long long lambda1, long long mu1, long long nu1, long long sigma1);

// Rank-2 cone: S_i integral and non-negative together with the label,
// per-weight and pairwise inequalities; equivalent to multiplicity4 > 0.
ConeReport cone_su3(const Weight& lambda, const Weight& mu, const Weight& nu,
                    const Weight& sigma);

}  // namespace sunmult
