// test_n_point.cpp — channel folding for many weights, the distinguished
// glued chain, and the direct chain counter.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sunmult/four_point.hpp"
#include "sunmult/n_point.hpp"
#include "sunmult/oracle.hpp"
#include "sunmult/three_point.hpp"
#include "sunmult/weights.hpp"

using namespace sunmult;

namespace {

CouplingQuery q1(std::vector<long long> labels) {
  CouplingQuery q;
  q.rank = 1;
  for (long long x : labels) q.weights.push_back(Weight{{x}});
  return q;
}

CouplingQuery make_query(int rank, std::vector<Weight> ws) {
  CouplingQuery q;
  q.rank = rank;
  q.weights = std::move(ws);
  return q;
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

TEST_CASE("frozen many-point multiplicities") {
  CHECK(multiplicity_n(q1({1, 1, 1, 1, 2})) == 3);
  CHECK(multiplicity_n(q1({1, 1, 1, 1, 1})) == 0);
  CHECK(multiplicity_n(q1({2, 2, 2, 2, 2})) == 6);
  CHECK(multiplicity_n(q1({2, 1, 1, 1, 1})) == 3);
  CHECK(multiplicity_n(q1({1, 1, 1, 1, 1, 1})) == 5);
  CHECK(multiplicity_n(q1({0, 0, 0, 0, 0})) == 1);

  const Weight z{{0, 0}}, f{{1, 0}}, fb{{0, 1}}, ad{{1, 1}};
  CHECK(multiplicity_n(make_query(2, {f, f, f, z, z})) == 1);
  CHECK(multiplicity_n(make_query(2, {ad, ad, ad, z, z})) == 2);
  CHECK(multiplicity_n(make_query(2, {f, fb, f, fb, z})) == 2);
  CHECK(multiplicity_n(make_query(2, {ad, f, fb, f, fb})) == 4);
  CHECK(multiplicity_n(make_query(2, {ad, ad, ad, ad, ad})) == 32);
  CHECK(multiplicity_n(make_query(2, {f, f, f, f, f})) == 0);  // off the lattice
}

TEST_CASE("three and four point queries delegate to the dedicated counters") {
  CHECK(multiplicity_n(make_query(2, {Weight{{1, 1}}, Weight{{1, 1}}, Weight{{1, 1}}})) ==
        multiplicity3(Weight{{1, 1}}, Weight{{1, 1}}, Weight{{1, 1}}));
  CHECK(multiplicity_n(q1({1, 1, 1, 1})) == multiplicity4(Weight{{1}}, Weight{{1}},
                                                          Weight{{1}}, Weight{{1}}));
}

TEST_CASE("folding is independent of the weight ordering") {
  const std::vector<Weight> base = {Weight{{2}}, Weight{{1}}, Weight{{1}},
                                    Weight{{1}}, Weight{{1}}};
  const long long m = multiplicity_n(make_query(1, base));
  std::vector<Weight> perm = base;
  std::sort(perm.begin(), perm.end());
  do {
    CHECK(multiplicity_n(make_query(1, perm)) == m);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::vector<Weight> base2 = {Weight{{1, 1}}, Weight{{1, 0}}, Weight{{0, 1}},
                                     Weight{{1, 0}}, Weight{{0, 1}}};
  const long long m2 = multiplicity_n(make_query(2, base2));
  std::vector<Weight> rev = base2;
  std::reverse(rev.begin(), rev.end());
  CHECK(multiplicity_n(make_query(2, rev)) == m2);
  std::vector<Weight> rot = base2;
  std::rotate(rot.begin(), rot.begin() + 2, rot.end());
  CHECK(multiplicity_n(make_query(2, rot)) == m2);
}

TEST_CASE("appending the zero weight changes nothing") {
  const std::vector<std::vector<Weight>> cases = {
      {Weight{{1}}, Weight{{1}}, Weight{{1}}, Weight{{1}}},
      {Weight{{1, 1}}, Weight{{1, 1}}, Weight{{1, 1}}},
      {Weight{{2, 0}}, Weight{{0, 1}}, Weight{{1, 1}}, Weight{{0, 1}}}};
  for (const auto& ws : cases) {
    const int rank = ws[0].rank();
    const long long m = multiplicity_n(make_query(rank, ws));
    std::vector<Weight> padded = ws;
    padded.push_back(zero_weight(rank));
    CHECK(multiplicity_n(make_query(rank, padded)) == m);
  }
}

TEST_CASE("oracle agreement on five-point sweeps") {
  for (const Weight& a : all_dominant(1, 3))
    for (const Weight& b : all_dominant(1, 3))
      for (const Weight& c : all_dominant(1, 3))
        for (const Weight& d : all_dominant(1, 3))
          for (const Weight& e : all_dominant(1, 3)) {
            const CouplingQuery q = make_query(1, {a, b, c, d, e});
            CHECK(multiplicity_n(q) == singlet_count(q.weights));
          }

  for (const Weight& a : all_dominant(2, 1))
    for (const Weight& b : all_dominant(2, 1))
      for (const Weight& c : all_dominant(2, 1)) {
        const CouplingQuery q =
            make_query(2, {a, b, c, Weight{{1, 0}}, Weight{{0, 1}}});
        CHECK(multiplicity_n(q) == singlet_count(q.weights));
      }
}

TEST_CASE("the distinguished chain has conjugate glued faces") {
  const CouplingQuery q = q1({1, 1, 1, 1, 2});
  const GluedDiagram d = initial_chain(q);
  REQUIRE(d.triangles.size() == 3);
  CHECK(d.points() == 5);
  REQUIRE(d.gluings.size() == 2);
  CHECK(d.gluings[0].a.face == Face::third);
  CHECK(d.gluings[0].b.face == Face::third);
  CHECK(d.gluings[1].a.face == Face::first);
  CHECK(d.gluings[1].b.face == Face::third);
  CHECK_FALSE(structural_violation(d));

  // External faces read back the query weights: the first triangle carries
  // weights 1 and 2, later triangles pick up the rest from the far end.
  CHECK(face_weight(d.triangles[0], Face::first) == Weight{{1}});
  CHECK(face_weight(d.triangles[0], Face::second) == Weight{{1}});
  CHECK(face_weight(d.triangles[1], Face::second) == Weight{{2}});
  CHECK(face_weight(d.triangles[2], Face::second) == Weight{{1}});
  CHECK(face_weight(d.triangles[2], Face::first) == Weight{{1}});

  CHECK_THROWS_AS(initial_chain(q1({1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("rank-2 chain structure") {
  const Weight f{{1, 0}}, fb{{0, 1}}, z{{0, 0}};
  const CouplingQuery q = make_query(2, {f, fb, f, fb, z});
  const GluedDiagram d = initial_chain(q);
  REQUIRE(d.triangles.size() == 3);
  CHECK_FALSE(structural_violation(d));
  CHECK(face_weight(d.triangles[0], Face::first) == f);
  CHECK(face_weight(d.triangles[0], Face::second) == fb);
  CHECK(face_weight(d.triangles[1], Face::second) == z);
  CHECK(face_weight(d.triangles[2], Face::second) == fb);
  CHECK(face_weight(d.triangles[2], Face::first) == f);
}

TEST_CASE("direct chain counting agrees with folding") {
  for (const Weight& a : all_dominant(1, 2))
    for (const Weight& b : all_dominant(1, 2))
      for (const Weight& c : all_dominant(1, 2))
        for (const Weight& d : all_dominant(1, 2))
          for (const Weight& e : all_dominant(1, 2)) {
            const CouplingQuery q = make_query(1, {a, b, c, d, e});
            CHECK(diagram_count_n(q) == multiplicity_n(q));
          }

  for (const Weight& a : all_dominant(2, 1))
    for (const Weight& b : all_dominant(2, 1)) {
      const CouplingQuery q =
          make_query(2, {a, b, Weight{{1, 0}}, Weight{{0, 1}}, Weight{{0, 0}}});
      CHECK(diagram_count_n(q) == multiplicity_n(q));
    }

  // Six-point spot checks at rank 1.
  CHECK(diagram_count_n(q1({1, 1, 1, 1, 1, 1})) == 5);
  CHECK(diagram_count_n(q1({2, 1, 1, 1, 1, 0})) == 3);
}

TEST_CASE("scale limits and validation") {
  CHECK_THROWS_AS(diagram_count_n(make_query(3, std::vector<Weight>(
                      5, zero_weight(3)))),
                  std::invalid_argument);
  CHECK_THROWS_AS(diagram_count_n(q1({1, 1, 1, 1, 1, 1, 2})), std::invalid_argument);

  CHECK_THROWS_AS(multiplicity_n(make_query(1, {Weight{{1}}, Weight{{1}}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_n(make_query(2, {Weight{{1, 1}}, Weight{{1}},
                                                Weight{{1, 1}}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_n(make_query(1, {Weight{{-1}}, Weight{{1}},
                                                Weight{{0}}})),
                  std::invalid_argument);
}
