// bounds.hpp — derivation and evaluation of nested summation bounds for
// entry-wise non-negativity over an affine integer family.
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sunmult {

// Names one summation variable: a hexagon coefficient of some triangle block
// ("v"), or a gluing coefficient ("g").
struct VarId {
  enum class Kind { hexagon, gluing };
  Kind kind = Kind::hexagon;
  int block = 0;  // triangle index (hexagon) or gluing index (gluing), 0-based
  int i = 0;
  int j = 0;      // unused for gluing variables

  std::string name() const;
  bool operator==(const VarId&) const = default;
};

// One inequality clause: the running value of `entry` plus coeff times the
// variable must stay >= 0. Clauses with coeff > 0 yield lower bounds, with
// coeff < 0 upper bounds.
struct Clause {
  int entry = 0;
  long long coeff = 0;
};

struct VarBounds {
  VarId id;
  std::vector<Clause> lower;
  std::vector<Clause> upper;
};

// A fully derived nested-sum description of the set
//   { x : init + Σ_k x_k · column_k  >=  0 entrywise },
// with each entry's constraint enforced at the LAST variable (in summation
// order) whose column touches it. Entries touched by no variable become
// static preconditions. An optional clamp intersects every variable's range
// with [-clamp, clamp] — used for finite-box scans.
struct BoundSystem {
  std::vector<long long> init;
  std::vector<std::vector<long long>> columns;  // columns[k][entry]
  std::vector<VarBounds> vars;                  // in summation order
  std::vector<int> static_entries;
  std::optional<long long> clamp;
};

// Builds the system. Without a clamp, every variable must end up with at
// least one lower and one upper clause (finiteness is structural); a
// violation throws std::logic_error.
BoundSystem derive_bounds(std::vector<long long> init,
                          std::vector<std::vector<long long>> columns,
                          std::vector<VarId> order,
                          std::optional<long long> clamp = std::nullopt);

struct CountResult {
  long long count = 0;
  bool touched_clamp = false;  // some counted point had a coordinate at ±clamp
};

// Counts the integer points of the system by nested enumeration. Throws
// std::overflow_error if the count exceeds 64 bits.
CountResult count_points(const BoundSystem& bs);

// Visits every point in lexicographic order of the summation variables.
void for_each_point(const BoundSystem& bs,
                    const std::function<void(const std::vector<long long>&)>& visit);

// Human-readable clause listing for diagnostics.
std::string describe(const BoundSystem& bs);

}  // namespace sunmult
