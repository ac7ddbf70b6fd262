// test_oracle.cpp — tableau-based tensor decomposition and dimension
// formula: frozen examples plus conservation and symmetry properties.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sunmult/oracle.hpp"
#include "sunmult/weights.hpp"

using namespace sunmult;

namespace {

std::vector<Weight> all_weights(int rank, long long bound) {
  std::vector<Weight> out;
  Weight w = zero_weight(rank);
  while (true) {
    out.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w.labels[i] == bound) w.labels[i--] = 0;
    if (i < 0) break;
    ++w.labels[i];
  }
  return out;
}

}  // namespace

TEST_CASE("dimension formula") {
  CHECK(dim(Weight{{1, 1}}) == 8);
  CHECK(dim(Weight{{1, 0}}) == 3);
  CHECK(dim(Weight{{0, 1}}) == 3);
  CHECK(dim(Weight{{3, 0}}) == 10);
  CHECK(dim(Weight{{2, 2}}) == 27);
  CHECK(dim(Weight{{1}}) == 2);
  CHECK(dim(Weight{{7}}) == 8);
  CHECK(dim(Weight{{1, 0, 0}}) == 4);
  CHECK(dim(Weight{{0, 1, 0}}) == 6);
  CHECK(dim(Weight{{1, 0, 1}}) == 15);
  for (int r = 1; r <= 5; ++r) CHECK(dim(zero_weight(r)) == 1);
  // Conjugation preserves dimension.
  for (const Weight& w : all_weights(3, 2)) CHECK(dim(w) == dim(conjugate(w)));
}

TEST_CASE("frozen small decompositions") {
  const Decomposition a = lr_decompose(Weight{{1, 0}}, Weight{{0, 1}});
  REQUIRE(a.size() == 2);
  CHECK(a.at(Weight{{0, 0}}) == 1);
  CHECK(a.at(Weight{{1, 1}}) == 1);

  const Decomposition b = lr_decompose(Weight{{1, 0}}, Weight{{1, 0}});
  REQUIRE(b.size() == 2);
  CHECK(b.at(Weight{{2, 0}}) == 1);
  CHECK(b.at(Weight{{0, 1}}) == 1);

  // 8 ⊗ 8 = 27 + 10 + 10* + 8 + 8 + 1.
  const Decomposition c = lr_decompose(Weight{{1, 1}}, Weight{{1, 1}});
  CHECK(c.at(Weight{{2, 2}}) == 1);
  CHECK(c.at(Weight{{3, 0}}) == 1);
  CHECK(c.at(Weight{{0, 3}}) == 1);
  CHECK(c.at(Weight{{1, 1}}) == 2);
  CHECK(c.at(Weight{{0, 0}}) == 1);
  CHECK(c.size() == 5);

  // Rank 1: (2) ⊗ (2) = (4) + (2) + (0).
  const Decomposition d = lr_decompose(Weight{{2}}, Weight{{2}});
  CHECK(d == Decomposition{{Weight{{0}}, 1}, {Weight{{2}}, 1}, {Weight{{4}}, 1}});
}

TEST_CASE("unit of the product") {
  for (const Weight& w : all_weights(2, 2)) {
    const Decomposition d = lr_decompose(w, zero_weight(2));
    REQUIRE(d.size() == 1);
    CHECK(d.at(w) == 1);
  }
}

TEST_CASE("decomposition properties on sweeps") {
  for (int rank : {1, 2, 3}) {
    const long long bound = rank == 3 ? 1 : 2;
    const std::vector<Weight> ws = all_weights(rank, bound);
    for (const Weight& a : ws)
      for (const Weight& b : ws) {
        const Decomposition ab = lr_decompose(a, b);
        // Symmetry.
        CHECK(ab == lr_decompose(b, a));
        // Dimension conservation.
        long long total = 0;
        for (const auto& [w, m] : ab) total += m * dim(w);
        CHECK(total == dim(a) * dim(b));
        // Conjugation equivariance.
        const Decomposition conj_ab = lr_decompose(conjugate(a), conjugate(b));
        CHECK(conj_ab.size() == ab.size());
        for (const auto& [w, m] : ab) CHECK(conj_ab.at(conjugate(w)) == m);
      }
  }
}

TEST_CASE("singlet counting") {
  CHECK(singlet_count({Weight{{1, 1}}, Weight{{1, 1}}, Weight{{1, 1}}}) == 2);
  CHECK(singlet_count({Weight{{1}}, Weight{{1}}, Weight{{1}}, Weight{{1}}}) == 2);
  CHECK(singlet_count({Weight{{1}}, Weight{{1}}, Weight{{1}}}) == 0);
  for (const Weight& w : all_weights(2, 2))
    CHECK(singlet_count({w, conjugate(w)}) == 1);
  // A singlet with anything else in the product contributes multiplicatively.
  CHECK(singlet_count({Weight{{1, 0}}, Weight{{0, 1}}, Weight{{0, 0}}}) == 1);
  CHECK_THROWS_AS(singlet_count({Weight{{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(singlet_count({Weight{{1, 0}}, Weight{{1}}}), std::invalid_argument);
}
