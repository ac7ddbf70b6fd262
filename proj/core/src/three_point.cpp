// three_point.cpp — triangle-polytope counting for three-weight couplings.
// SPDX-License-Identifier: MIT
#include "sunmult/three_point.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sunmult {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void check_triple(const Weight& lambda, const Weight& mu, const Weight& nu) {
  const int r = lambda.rank();
  require(r >= 1, "rank must be positive");
  require(mu.rank() == r && nu.rank() == r, "rank mismatch");
  require(is_dominant(lambda) && is_dominant(mu) && is_dominant(nu),
          "multiplicities require dominant weights");
}

std::vector<std::vector<long long>> hexagon_columns(int r) {
  std::vector<std::vector<long long>> cols;
  for (const VarId& id : three_point_order(r))
    cols.push_back(virtual_triangle(r, id.i, id.j).entries());
  return cols;
}

std::string triple_key(const Weight& a, const Weight& b, const Weight& c) {
  std::ostringstream key;
  key << a.rank() << '|' << format_weight(a) << '|' << format_weight(b) << '|'
      << format_weight(c);
  return key.str();
}

}  // namespace

std::vector<VarId> three_point_order(int rank) {
  std::vector<VarId> order;
  for (int s = 2; s <= rank; ++s)
    for (int i = s - 1; i >= 1; --i)
      order.push_back({VarId::Kind::hexagon, 0, i, s - i});
  return order;
}

BoundSystem three_point_bounds(const Weight& lambda, const Weight& mu, const Weight& nu) {
  const int r = lambda.rank();
  const BZTriangle t0 = initial_triangle(lambda, mu, nu);
  return derive_bounds(t0.entries(), hexagon_columns(r), three_point_order(r));
}

long long multiplicity3(const Weight& lambda, const Weight& mu, const Weight& nu) {
  check_triple(lambda, mu, nu);
  if (!root_lattice_check({lambda, mu, nu})) return 0;

  static std::mutex cache_mutex;
  static std::unordered_map<std::string, long long> cache;
  const std::string key = triple_key(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const long long count = count_points(three_point_bounds(lambda, mu, nu)).count;

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, count);
  return count;
}

std::vector<CoefficientVector3> enumerate3(const Weight& lambda, const Weight& mu,
                                           const Weight& nu) {
  check_triple(lambda, mu, nu);
  std::vector<CoefficientVector3> out;
  if (!root_lattice_check({lambda, mu, nu})) return out;

  const int r = lambda.rank();
  const BoundSystem bs = three_point_bounds(lambda, mu, nu);
  const std::vector<VarId> order = three_point_order(r);
  for_each_point(bs, [&](const std::vector<long long>& x) {
    CoefficientVector3 cv;
    cv.rank = r;
    for (size_t k = 0; k < order.size(); ++k) cv.v[{order[k].i, order[k].j}] = x[k];
    out.push_back(std::move(cv));
  });
  return out;
}

long long tensor_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) {
  return multiplicity3(lambda, mu, conjugate(nu));
}

long long multiplicity3_box(const Weight& lambda, const Weight& mu, const Weight& nu) {
  check_triple(lambda, mu, nu);
  if (!root_lattice_check({lambda, mu, nu})) return 0;

  const int r = lambda.rank();
  const BZTriangle t0 = initial_triangle(lambda, mu, nu);
  long long bound = 0;
  for (long long x : t0.entries()) bound = std::max(bound, std::llabs(x));
  for (const Weight* w : {&lambda, &mu, &nu})
    for (long long x : w->labels) bound += x;

  const std::vector<std::vector<long long>> cols = hexagon_columns(r);
  const size_t nvars = cols.size();
  if (nvars == 0) return is_true_triangle(t0) ? 1 : 0;

  std::vector<long long> v(nvars, -bound);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (size_t e = 0; e < t0.entries().size() && ok; ++e) {
      long long val = t0.entries()[e];
      for (size_t k = 0; k < nvars; ++k) val += v[k] * cols[k][e];
      ok = val >= 0;
    }
    if (ok) {
      if (__builtin_add_overflow(count, 1LL, &count))
        throw std::overflow_error("point count overflow");
    }
    size_t k = 0;
    while (k < nvars && v[k] == bound) v[k++] = -bound;
    if (k == nvars) break;
    ++v[k];
  }
  return count;
}

}  // namespace sunmult
