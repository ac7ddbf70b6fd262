// test_three_point.cpp — triangle-polytope counting: frozen values,
// independently transcribed rank-2/rank-3 bound formulas, enumeration
// validity, box cross-checks, and character-theory oracle agreement.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "sunmult/oracle.hpp"
#include "sunmult/three_point.hpp"
#include "sunmult/triangle.hpp"
#include "sunmult/weights.hpp"

using namespace sunmult;

namespace {

Weight w1(long long a) { return Weight{{a}}; }
Weight w2(long long a, long long b) { return Weight{{a, b}}; }
Weight w3(long long a, long long b, long long c) { return Weight{{a, b, c}}; }

// Hand-transcribed single-interval count at rank 2: one hexagon coefficient
// with explicit lower and upper envelopes in the coupling parameters.
long long rank2_interval_count(const Weight& la, const Weight& mu, const Weight& nu) {
  if (!root_lattice_check({la, mu, nu})) return 0;
  const CouplingParams p = coupling_params(la, mu, nu);
  const long long lo = std::max({0LL, -p.N[0], -p.Nprime[1]});
  const long long hi = std::min({p.n[0], p.n[1], mu.label(1), la.label(2),
                                 p.Nprime[0], p.N[1]});
  return std::max(0LL, hi - lo + 1);
}

// Hand-transcribed three-deep nested sum at rank 3, variables ordered
// v11, v21, v12.
long long rank3_nested_count(const Weight& la, const Weight& mu, const Weight& nu) {
  if (!root_lattice_check({la, mu, nu})) return 0;
  const CouplingParams p = coupling_params(la, mu, nu);
  const long long n1 = p.n[0], n2 = p.n[1], n3 = p.n[2];
  const long long N1 = p.N[0], N2 = p.N[1], N3 = p.N[2];
  const long long Q1 = p.Nprime[0], Q2 = p.Nprime[1], Q3 = p.Nprime[2];
  long long count = 0;
  for (long long v11 = 0; v11 <= std::min(mu.label(1), la.label(3)); ++v11)
    for (long long v21 = std::max(v11, -Q3);
         v21 <= std::min({la.label(2) + v11, n3, N3}); ++v21) {
      const long long lo = std::max({-N1, v11, -Q2 + v21, -mu.label(1) + v11 + v21});
      const long long hi = std::min({n1, mu.label(2) + v11, la.label(3) - v11 + v21,
                                     n2 + v11 - v21, Q1, N2 + v21});
      count += std::max(0LL, hi - lo + 1);
    }
  return count;
}

std::vector<Weight> all_dominant(int rank, long long max_label) {
  std::vector<Weight> out;
  std::vector<long long> labels(static_cast<size_t>(rank), 0);
  while (true) {
    out.push_back(Weight{labels});
    size_t k = 0;
    while (k < labels.size() && labels[k] == max_label) labels[k++] = 0;
    if (k == labels.size()) break;
    ++labels[k];
  }
  return out;
}

}  // namespace

TEST_CASE("summation order walks anti-diagonals with descending row index") {
  CHECK(three_point_order(1).empty());
  CHECK(three_point_order(2) == std::vector<VarId>{{VarId::Kind::hexagon, 0, 1, 1}});
  CHECK(three_point_order(3) ==
        std::vector<VarId>{{VarId::Kind::hexagon, 0, 1, 1},
                           {VarId::Kind::hexagon, 0, 2, 1},
                           {VarId::Kind::hexagon, 0, 1, 2}});
  CHECK(three_point_order(4) ==
        std::vector<VarId>{{VarId::Kind::hexagon, 0, 1, 1},
                           {VarId::Kind::hexagon, 0, 2, 1},
                           {VarId::Kind::hexagon, 0, 1, 2},
                           {VarId::Kind::hexagon, 0, 3, 1},
                           {VarId::Kind::hexagon, 0, 2, 2},
                           {VarId::Kind::hexagon, 0, 1, 3}});
}

TEST_CASE("frozen multiplicities across ranks") {
  // Rank 1: triangle inequality plus parity.
  CHECK(multiplicity3(w1(2), w1(2), w1(2)) == 1);
  CHECK(multiplicity3(w1(2), w1(2), w1(4)) == 1);
  CHECK(multiplicity3(w1(2), w1(2), w1(6)) == 0);
  CHECK(multiplicity3(w1(1), w1(1), w1(1)) == 0);
  CHECK(multiplicity3(w1(3), w1(1), w1(2)) == 1);
  CHECK(multiplicity3(w1(5), w1(3), w1(2)) == 1);

  // Rank 2.
  CHECK(multiplicity3(w2(1, 1), w2(1, 1), w2(1, 1)) == 2);
  CHECK(multiplicity3(w2(1, 2), w2(2, 1), w2(3, 3)) == 1);
  CHECK(multiplicity3(w2(1, 0), w2(0, 1), w2(0, 0)) == 1);
  CHECK(multiplicity3(w2(1, 0), w2(1, 0), w2(1, 0)) == 1);
  CHECK(multiplicity3(w2(2, 2), w2(2, 2), w2(2, 2)) == 3);
  CHECK(multiplicity3(w2(3, 0), w2(0, 3), w2(0, 0)) == 1);
  CHECK(multiplicity3(w2(2, 1), w2(1, 2), w2(1, 1)) == 2);
  CHECK(multiplicity3(w2(3, 3), w2(3, 3), w2(3, 3)) == 4);

  // Rank 3.
  CHECK(multiplicity3(w3(1, 0, 1), w3(1, 0, 1), w3(1, 0, 1)) == 2);
  CHECK(multiplicity3(w3(2, 0, 2), w3(2, 0, 2), w3(2, 0, 2)) == 3);
  // These two triples miss the root lattice entirely.
  CHECK(multiplicity3(w3(1, 0, 0), w3(0, 1, 0), w3(0, 0, 1)) == 0);
  CHECK(multiplicity3(w3(1, 1, 1), w3(1, 1, 1), w3(1, 1, 1)) == 0);
}

TEST_CASE("rank-2 counts equal the transcribed single-interval formula") {
  for (const Weight& la : all_dominant(2, 4))
    for (const Weight& mu : all_dominant(2, 4))
      for (const Weight& nu : all_dominant(2, 4))
        CHECK(multiplicity3(la, mu, nu) == rank2_interval_count(la, mu, nu));
}

TEST_CASE("rank-3 counts equal the transcribed nested formula") {
  for (const Weight& la : all_dominant(3, 2))
    for (const Weight& mu : all_dominant(3, 2))
      for (const Weight& nu : all_dominant(3, 2))
        CHECK(multiplicity3(la, mu, nu) == rank3_nested_count(la, mu, nu));
}

TEST_CASE("derived bound systems have no clamp and count correctly") {
  const BoundSystem bs = three_point_bounds(w2(1, 1), w2(1, 1), w2(1, 1));
  CHECK_FALSE(bs.clamp.has_value());
  REQUIRE(bs.vars.size() == 1);
  CHECK(bs.vars[0].id == VarId{VarId::Kind::hexagon, 0, 1, 1});
  CHECK(count_points(bs).count == 2);

  // Non-integral coupling parameters are rejected up front.
  CHECK_THROWS_AS(three_point_bounds(w2(1, 0), w2(0, 0), w2(0, 0)),
                  std::invalid_argument);
}

TEST_CASE("enumeration yields exactly the valid distinct triangles") {
  for (const Weight& la : all_dominant(2, 3))
    for (const Weight& mu : all_dominant(2, 3))
      for (const Weight& nu : all_dominant(2, 3)) {
        const auto cvs = enumerate3(la, mu, nu);
        CHECK(static_cast<long long>(cvs.size()) == multiplicity3(la, mu, nu));
        std::set<std::vector<long long>> seen;
        for (const CoefficientVector3& cv : cvs) {
          const BZTriangle t = reconstruct_triangle(la, mu, nu, cv);
          CHECK(is_true_triangle(t));
          CHECK_FALSE(hexagon_violation(t));
          CHECK(face_weight(t, Face::first) == la);
          CHECK(face_weight(t, Face::second) == mu);
          CHECK(face_weight(t, Face::third) == nu);
          seen.insert(t.entries());
        }
        CHECK(seen.size() == cvs.size());
      }
}

TEST_CASE("rank-3 enumeration spot checks") {
  const auto cvs = enumerate3(w3(1, 0, 1), w3(1, 0, 1), w3(1, 0, 1));
  REQUIRE(cvs.size() == 2);
  for (const CoefficientVector3& cv : cvs) {
    const BZTriangle t =
        reconstruct_triangle(w3(1, 0, 1), w3(1, 0, 1), w3(1, 0, 1), cv);
    CHECK(is_true_triangle(t));
    CHECK_FALSE(hexagon_violation(t));
  }
}

TEST_CASE("box scan agrees with the derived bounds") {
  for (const Weight& la : all_dominant(2, 2))
    for (const Weight& mu : all_dominant(2, 2))
      for (const Weight& nu : all_dominant(2, 2))
        CHECK(multiplicity3_box(la, mu, nu) == multiplicity3(la, mu, nu));

  CHECK(multiplicity3_box(w2(1, 2), w2(2, 1), w2(3, 3)) == 1);
  CHECK(multiplicity3_box(w3(1, 0, 1), w3(1, 0, 1), w3(1, 0, 1)) == 2);
  CHECK(multiplicity3_box(w1(4), w1(3), w1(3)) == 1);
}

TEST_CASE("counts agree with the character oracle") {
  for (const Weight& la : all_dominant(1, 6))
    for (const Weight& mu : all_dominant(1, 6))
      for (const Weight& nu : all_dominant(1, 6))
        CHECK(multiplicity3(la, mu, nu) == singlet_count({la, mu, nu}));

  for (const Weight& la : all_dominant(2, 3))
    for (const Weight& mu : all_dominant(2, 3))
      for (const Weight& nu : all_dominant(2, 3))
        CHECK(multiplicity3(la, mu, nu) == singlet_count({la, mu, nu}));

  for (const Weight& la : all_dominant(3, 1))
    for (const Weight& mu : all_dominant(3, 1))
      for (const Weight& nu : all_dominant(3, 1))
        CHECK(multiplicity3(la, mu, nu) == singlet_count({la, mu, nu}));
}

TEST_CASE("tensor coefficients match the product decomposition") {
  const std::vector<std::pair<Weight, Weight>> pairs = {
      {w2(1, 1), w2(1, 1)}, {w2(2, 0), w2(1, 2)}, {w1(3), w1(5)},
      {w3(1, 0, 1), w3(1, 1, 0)}};
  for (const auto& [la, mu] : pairs) {
    const auto terms = lr_decompose(la, mu);
    long long dim_sum = 0;
    for (const Weight& nu : dominant_weights_below(la + mu)) {
      long long expected = 0;
      for (const auto& [w, m] : terms)
        if (w == nu) expected = m;
      CHECK(tensor_coefficient(la, mu, nu) == expected);
      dim_sum += tensor_coefficient(la, mu, nu) * dim(nu);
    }
    CHECK(dim_sum == dim(la) * dim(mu));
  }
}

TEST_CASE("full permutation and conjugation symmetry") {
  for (const Weight& la : all_dominant(2, 2))
    for (const Weight& mu : all_dominant(2, 2))
      for (const Weight& nu : all_dominant(2, 2)) {
        const long long m = multiplicity3(la, mu, nu);
        CHECK(multiplicity3(la, nu, mu) == m);
        CHECK(multiplicity3(mu, la, nu) == m);
        CHECK(multiplicity3(mu, nu, la) == m);
        CHECK(multiplicity3(nu, la, mu) == m);
        CHECK(multiplicity3(nu, mu, la) == m);
        CHECK(multiplicity3(conjugate(la), conjugate(mu), conjugate(nu)) == m);
      }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(multiplicity3(w1(1), w2(1, 1), w1(1)), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity3(Weight{{-1, 0}}, w2(0, 0), w2(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate3(w1(1), w2(1, 1), w1(1)), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity3_box(Weight{{-1}}, w1(0), w1(0)),
                  std::invalid_argument);
}
