// weights.hpp — Dynkin-label weight arithmetic for su(r+1).
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sunmult {

// A weight of su(r+1) in the fundamental-weight basis (Dynkin labels).
// Dominant weights carry non-negative labels; helper constructions such as
// simple roots may carry negative labels, and the representation-theoretic
// entry points reject those explicitly via is_dominant checks.
struct Weight {
  std::vector<long long> labels;

  Weight() = default;
  explicit Weight(std::vector<long long> l) : labels(std::move(l)) {}

  int rank() const { return static_cast<int>(labels.size()); }
  long long label(int i) const;  // 1-based Dynkin label λ_i

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

// Coordinates of a weight in the simple-root basis. For su(r+1) these are
// rationals with fixed denominator r+1; they are kept as exact integer
// numerators (value(i) = numerators[i-1] / denominator).
struct DualLabels {
  int rank = 0;
  std::vector<long long> numerators;
  long long denominator = 1;  // always rank + 1

  long long numerator(int i) const;  // 1-based
};

// The derived integer parameters n_i, N_i, N'_i of a three-weight coupling.
// They populate the right edge of the initial triangle and control every
// summation bound.
struct CouplingParams {
  int rank = 0;
  std::vector<long long> n;
  std::vector<long long> N;
  std::vector<long long> Nprime;
};

// Label reversal — conjugation of the representation. Involution.
Weight conjugate(const Weight& w);

// True when every Dynkin label is non-negative.
bool is_dominant(const Weight& w);

// Entrywise sum; throws std::invalid_argument on rank mismatch.
Weight operator+(const Weight& a, const Weight& b);

Weight zero_weight(int rank);

// The i-th simple root (1-based) written in the fundamental-weight basis:
// 2 at position i, -1 at positions i±1. Not dominant for r ≥ 1.
Weight simple_root(int rank, int i);

// Exact change of basis to simple-root coordinates:
//   numerators[i-1] = Σ_j ((r+1)·min(i,j) − i·j) · λ_j,  denominator r+1.
DualLabels dual_labels(const Weight& w);

// Tests whether the sum of the given weights lies on the root lattice.
// Present: the integer coordinates m_i of the sum in the simple-root basis
// (non-negative when all inputs are dominant). Absent: the sum has
// fractional root coordinates, and no coupling of these weights exists.
std::optional<std::vector<long long>> root_lattice_check(const std::vector<Weight>& ws);

// Computes n_i, N_i, N'_i for the coupling of (lambda, mu, third):
//   n_i  = lambda^{r-i+1} + mu^{r-i+1} − third^i      (simple-root coords),
//   N_i  = n_{i-1} − n_i + mu_{r-i+1}   with n_0 taken as 0,
//   N'_i = third_i − N_i.
// Throws std::invalid_argument when any n_i is non-integral ("not in root
// lattice") or on rank mismatch. For four-point use, pass third = nu + sigma.
CouplingParams coupling_params(const Weight& lambda, const Weight& mu, const Weight& third);

// All dominant weights reachable from `base` by subtracting non-negative
// integer combinations of simple roots — the support box for intermediate
// weights of a product decomposition. Requires dominant input.
std::vector<Weight> dominant_weights_below(const Weight& base);

// Text encoding. A weight is a comma-separated label list ("1,1"); a weight
// list separates weights with ";" ("1,1;1,1;1,1"). Whitespace around tokens
// is ignored. Parse errors throw std::invalid_argument.
Weight parse_weight(const std::string& text);
std::vector<Weight> parse_weight_list(const std::string& text);
std::string format_weight(const Weight& w);
std::string format_weight_list(const std::vector<Weight>& ws);

}  // namespace sunmult
