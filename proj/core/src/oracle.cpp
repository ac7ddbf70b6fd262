// oracle.cpp — Littlewood–Richardson decomposition and Weyl dimensions.
// SPDX-License-Identifier: MIT
#include "sunmult/oracle.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sunmult {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("counter overflow");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("counter overflow");
  return out;
}

// A partition with at most r+1 rows, stored as non-increasing row lengths.
using Shape = std::vector<long long>;

Shape partition_of(const Weight& w) {
  const int r = w.rank();
  Shape p(static_cast<size_t>(r) + 1, 0);
  long long acc = 0;
  for (int i = r; i >= 1; --i) {
    acc += w.label(i);
    p[static_cast<size_t>(i) - 1] = acc;
  }
  return p;
}

Weight weight_of(const Shape& p, int r) {
  // Full columns of height r+1 drop out of the su(r+1) labels, which only
  // see consecutive row differences.
  Weight w = zero_weight(r);
  for (int i = 0; i < r; ++i)
    w.labels[static_cast<size_t>(i)] =
        p[static_cast<size_t>(i)] - p[static_cast<size_t>(i) + 1];
  return w;
}

// Column-strict strip placement with the lattice-word condition, the row-wise
// form: for each row i, the number of copies of the current entry in rows
// 1..i may not exceed the number of copies of the previous entry in rows
// 1..i-1. `prev_prefix` carries that right-hand side for the current row.
void place_strip(Shape& cur, const Shape& before, const std::vector<long long>& prev_counts,
                 std::vector<long long>& counts, int row, long long remaining,
                 long long prev_prefix, long long cur_prefix,
                 const std::function<void()>& emit) {
  if (remaining == 0) {
    emit();  // rows below `row` receive nothing
    return;
  }
  const int rows = static_cast<int>(cur.size());
  if (row >= rows) return;

  long long max_here = remaining;
  if (row > 0) {
    // Horizontal strip: boxes in this row must sit strictly right of the
    // previous row's pre-strip end.
    const long long strip_cap =
        before[static_cast<size_t>(row) - 1] - cur[static_cast<size_t>(row)];
    if (strip_cap < max_here) max_here = strip_cap;
  }
  const long long lattice_cap = prev_prefix - cur_prefix;
  if (lattice_cap < max_here) max_here = lattice_cap;

  const long long next_prev_prefix = prev_prefix + prev_counts[static_cast<size_t>(row)];
  for (long long add = 0; add <= max_here; ++add) {
    cur[static_cast<size_t>(row)] += add;
    counts[static_cast<size_t>(row)] = add;
    place_strip(cur, before, prev_counts, counts, row + 1, remaining - add, next_prev_prefix,
                cur_prefix + add, emit);
    cur[static_cast<size_t>(row)] -= add;
    counts[static_cast<size_t>(row)] = 0;
  }
}

void decompose_strips(Shape& cur, const Shape& add_rows, size_t k,
                      std::vector<long long>& prev_counts, std::map<Shape, long long>& out) {
  if (k == add_rows.size() || add_rows[k] == 0) {
    auto [it, inserted] = out.try_emplace(cur, 1);
    if (!inserted) it->second = checked_add(it->second, 1);
    return;
  }
  const Shape before = cur;
  std::vector<long long> counts(cur.size(), 0);
  // The first entry has no lattice constraint; seed its budget with the full
  // strip size so the cap never binds.
  const long long initial_prefix = (k == 0) ? add_rows[0] : 0;
  place_strip(cur, before, prev_counts, counts, 0, add_rows[k], initial_prefix, 0, [&] {
    std::vector<long long> saved = std::move(prev_counts);
    prev_counts = counts;
    decompose_strips(cur, add_rows, k + 1, prev_counts, out);
    prev_counts = std::move(saved);
  });
}

std::string cache_key(const Weight& a, const Weight& b) {
  std::ostringstream key;
  key << a.rank() << '|' << format_weight(a) << '|' << format_weight(b);
  return key.str();
}

}  // namespace

Decomposition lr_decompose(const Weight& lambda, const Weight& mu) {
  const int r = lambda.rank();
  require(r >= 1, "rank must be positive");
  require(mu.rank() == r, "rank mismatch in tensor decomposition");
  require(is_dominant(lambda) && is_dominant(mu), "tensor decomposition requires dominant weights");

  static std::mutex cache_mutex;
  static std::unordered_map<std::string, Decomposition> cache;
  const std::string key = cache_key(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  Shape cur = partition_of(lambda);
  const Shape add_rows = partition_of(mu);
  std::map<Shape, long long> shapes;
  std::vector<long long> prev_counts(cur.size(), 0);
  decompose_strips(cur, add_rows, 0, prev_counts, shapes);

  Decomposition out;
  for (const auto& [shape, mult] : shapes) {
    const Weight w = weight_of(shape, r);
    auto [it, inserted] = out.try_emplace(w, mult);
    if (!inserted) it->second = checked_add(it->second, mult);
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, out);
  return out;
}

long long singlet_count(const std::vector<Weight>& ws) {
  require(ws.size() >= 2, "singlet count needs at least two weights");
  const int r = ws.front().rank();
  for (const Weight& w : ws) {
    require(w.rank() == r, "rank mismatch in singlet count");
    require(is_dominant(w), "singlet count requires dominant weights");
  }

  Decomposition acc{{ws.front(), 1}};
  for (size_t a = 1; a + 1 < ws.size(); ++a) {
    Decomposition next;
    for (const auto& [w, mult] : acc) {
      for (const auto& [x, m2] : lr_decompose(w, ws[a])) {
        auto [it, inserted] = next.try_emplace(x, 0);
        it->second = checked_add(it->second, checked_mul(mult, m2));
      }
    }
    acc = std::move(next);
  }
  const auto it = acc.find(conjugate(ws.back()));
  return it == acc.end() ? 0 : it->second;
}

long long dim(const Weight& w) {
  const int r = w.rank();
  require(r >= 1, "rank must be positive");
  require(is_dominant(w), "dimension requires a dominant weight");

  using I128 = __int128;
  const auto gcd128 = [](I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      I128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  const I128 limit = static_cast<I128>(1) << 100;

  I128 num = 1, den = 1;
  for (int i = 1; i <= r; ++i) {
    long long seg = 0;
    for (int j = i; j <= r; ++j) {
      seg += w.label(j);
      num *= seg + (j - i + 1);
      den *= (j - i + 1);
      const I128 g = gcd128(num, den);
      num /= g;
      den /= g;
      if (num > limit) throw std::overflow_error("dimension overflow");
    }
  }
  // All denominator factors divide out for integral weights.
  const I128 value = num / den;
  if (value > static_cast<I128>(0x7fffffffffffffffLL))
    throw std::overflow_error("dimension overflow");
  return static_cast<long long>(value);
}

}  // namespace sunmult
