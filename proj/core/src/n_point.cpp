// n_point.cpp — channel-folded N-point counting and chain enumeration.
// SPDX-License-Identifier: MIT
#include "sunmult/n_point.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sunmult/bounds.hpp"
#include "sunmult/four_point.hpp"
#include "sunmult/three_point.hpp"

namespace sunmult {

namespace {

void check_query(const CouplingQuery& q) {
  if (q.rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (q.points() < 3) throw std::invalid_argument("need at least three weights");
  for (const Weight& w : q.weights) {
    if (w.rank() != q.rank) throw std::invalid_argument("weights must share one rank");
    if (!is_dominant(w)) throw std::invalid_argument("weights must be dominant");
  }
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count exceeds 64 bits");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count exceeds 64 bits");
  return out;
}

// Sum of weights 3..j (1-based labelling); zero weight when j < 3.
Weight tail_sum(const CouplingQuery& q, int j) {
  Weight s = zero_weight(q.rank);
  for (int k = 3; k <= j; ++k) s = s + q.weights[k - 1];
  return s;
}

// Summation variables of the chain: per triangle its hexagons, with the
// gluing coefficients of the joint to the next triangle in between.
std::vector<VarId> chain_order(int rank, int triangles) {
  std::vector<VarId> order;
  for (int a = 0; a < triangles; ++a) {
    for (VarId id : three_point_order(rank)) {
      id.block = a;
      order.push_back(id);
    }
    if (a + 1 < triangles)
      for (int i = rank; i >= 1; --i)
        order.push_back(VarId{VarId::Kind::gluing, a, i, 0});
  }
  return order;
}

// Coefficient columns over the concatenated entries of all triangles,
// aligned with chain_order. Gluing k subtracts a face increment pair from
// triangles k and k+1: third faces for the first joint, first-to-third for
// the later ones.
std::vector<std::vector<long long>> chain_columns(int rank, int triangles) {
  const int e = entry_count(rank);
  std::vector<std::vector<long long>> cols;
  for (const VarId& id : chain_order(rank, triangles)) {
    std::vector<long long> col(triangles * e, 0);
    if (id.kind == VarId::Kind::hexagon) {
      const BZTriangle v = virtual_triangle(rank, id.i, id.j);
      for (int p = 0; p < e; ++p) col[id.block * e + p] = v.entries()[p];
    } else {
      const BZTriangle left = id.block == 0 ? third_face_increment(rank, id.i)
                                            : first_face_increment(rank, id.i);
      const BZTriangle right = third_face_increment(rank, rank + 1 - id.i);
      for (int p = 0; p < e; ++p) {
        col[id.block * e + p] = -left.entries()[p];
        col[(id.block + 1) * e + p] = -right.entries()[p];
      }
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

long long multiplicity_n(const CouplingQuery& q) {
  check_query(q);
  if (!root_lattice_check(q.weights)) return 0;
  const int n = q.points();
  if (n == 3) return multiplicity3(q.weights[0], q.weights[1], q.weights[2]);
  if (n == 4) return multiplicity4(q.weights[0], q.weights[1], q.weights[2], q.weights[3]);

  long long total = 0;
  for (const Weight& rho : dominant_weights_below(q.weights[0] + q.weights[1])) {
    const long long left = multiplicity3(q.weights[0], q.weights[1], conjugate(rho));
    if (left == 0) continue;
    CouplingQuery rest;
    rest.rank = q.rank;
    rest.weights.push_back(rho);
    rest.weights.insert(rest.weights.end(), q.weights.begin() + 2, q.weights.end());
    const long long tail = multiplicity_n(rest);
    if (tail == 0) continue;
    total = checked_add(total, checked_mul(left, tail));
  }
  return total;
}

GluedDiagram initial_chain(const CouplingQuery& q) {
  check_query(q);
  const int n = q.points();
  GluedDiagram d;
  d.rank = q.rank;
  if (!root_lattice_check(q.weights))
    throw std::invalid_argument("weights do not sum into the root lattice");
  d.triangles.push_back(initial_triangle(q.weights[0], q.weights[1], tail_sum(q, n)));
  for (int a = 2; a <= n - 2; ++a)
    d.triangles.push_back(initial_triangle(tail_sum(q, n + 1 - a), q.weights[n + 1 - a],
                                           conjugate(tail_sum(q, n + 2 - a))));
  for (int k = 0; k + 1 < n - 2; ++k)
    d.gluings.push_back(Gluing{FaceRef{k, k == 0 ? Face::third : Face::first},
                               FaceRef{k + 1, Face::third}});
  return d;
}

long long diagram_count_n(const CouplingQuery& q) {
  check_query(q);
  if (q.points() > 6 || q.rank > 2)
    throw std::invalid_argument("diagram_count_n is limited to six points and rank two");
  if (!root_lattice_check(q.weights)) return 0;

  const GluedDiagram d0 = initial_chain(q);
  const int triangles = static_cast<int>(d0.triangles.size());
  const int e = entry_count(q.rank);
  std::vector<long long> init;
  for (const BZTriangle& t : d0.triangles)
    init.insert(init.end(), t.entries().begin(), t.entries().end());

  long long box = 0;
  for (long long v : init) box = std::max(box, std::llabs(v));
  for (const Weight& w : q.weights)
    for (long long l : w.labels) box += l;
  // Keep a positive radius so the boundary-touch validation stays meaningful
  // for the all-zero query, whose only solution is the origin.
  box = std::max(box, 1LL);

  const std::vector<std::vector<long long>> cols = chain_columns(q.rank, triangles);
  const BoundSystem bs = derive_bounds(init, cols, chain_order(q.rank, triangles), box);

  long long count = 0;
  for_each_point(bs, [&](const std::vector<long long>& x) {
    GluedDiagram d = d0;
    for (std::size_t k = 0; k < x.size(); ++k)
      for (int p = 0; p < triangles * e; ++p)
        d.triangles[p / e].entries()[p % e] += x[k] * cols[k][p];
    if (!is_true_diagram(d)) return;
    if (const auto why = structural_violation(d))
      throw std::logic_error("chain reconstruction broke structure: " + *why);
    for (long long xi : x)
      if (std::llabs(xi) == box) throw std::logic_error("diagram search box too small");
    count = checked_add(count, 1);
  });
  return count;
}

}  // namespace sunmult
