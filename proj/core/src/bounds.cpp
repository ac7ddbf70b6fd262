// bounds.cpp — nested summation bound derivation and evaluation.
// SPDX-License-Identifier: MIT
#include "sunmult/bounds.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace sunmult {

std::string VarId::name() const {
  std::ostringstream out;
  if (kind == Kind::hexagon) {
    out << 'v' << (block + 1) << '[' << i << ',' << j << ']';
  } else {
    out << 'g';
    if (block > 0) out << (block + 1);
    out << '[' << i << ']';
  }
  return out.str();
}

BoundSystem derive_bounds(std::vector<long long> init,
                          std::vector<std::vector<long long>> columns,
                          std::vector<VarId> order,
                          std::optional<long long> clamp) {
  const size_t entries = init.size();
  if (columns.size() != order.size())
    throw std::logic_error("bound derivation: column/order size mismatch");
  for (const auto& col : columns)
    if (col.size() != entries)
      throw std::logic_error("bound derivation: column length mismatch");

  BoundSystem bs;
  bs.init = std::move(init);
  bs.columns = std::move(columns);
  bs.clamp = clamp;
  bs.vars.resize(order.size());
  for (size_t k = 0; k < order.size(); ++k) bs.vars[k].id = order[k];

  for (size_t e = 0; e < entries; ++e) {
    int last = -1;
    for (size_t k = 0; k < bs.columns.size(); ++k)
      if (bs.columns[k][e] != 0) last = static_cast<int>(k);
    if (last < 0) {
      bs.static_entries.push_back(static_cast<int>(e));
      continue;
    }
    const long long c = bs.columns[static_cast<size_t>(last)][e];
    Clause clause{static_cast<int>(e), c};
    if (c > 0)
      bs.vars[static_cast<size_t>(last)].lower.push_back(clause);
    else
      bs.vars[static_cast<size_t>(last)].upper.push_back(clause);
  }

  if (!bs.clamp) {
    for (const VarBounds& vb : bs.vars) {
      if (vb.lower.empty() || vb.upper.empty())
        throw std::logic_error("bound derivation: variable " + vb.id.name() +
                               " has no finite range");
    }
  }
  return bs;
}

namespace {

long long ceil_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

long long floor_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

struct Evaluator {
  const BoundSystem& bs;
  const std::function<void(const std::vector<long long>&)>* visit;
  std::vector<long long> cur;          // running entry values
  std::vector<long long> point;
  std::vector<std::vector<std::pair<int, long long>>> sparse;  // per var
  long long count = 0;
  bool touched = false;

  explicit Evaluator(const BoundSystem& system,
                     const std::function<void(const std::vector<long long>&)>* v)
      : bs(system), visit(v), cur(system.init), point(system.vars.size(), 0) {
    sparse.resize(bs.columns.size());
    for (size_t k = 0; k < bs.columns.size(); ++k)
      for (size_t e = 0; e < bs.columns[k].size(); ++e)
        if (bs.columns[k][e] != 0)
          sparse[k].emplace_back(static_cast<int>(e), bs.columns[k][e]);
  }

  bool statics_ok() const {
    for (int e : bs.static_entries)
      if (bs.init[static_cast<size_t>(e)] < 0) return false;
    return true;
  }

  void run(size_t level, bool on_boundary) {
    if (level == bs.vars.size()) {
      if (on_boundary) touched = true;
      if (__builtin_add_overflow(count, 1LL, &count))
        throw std::overflow_error("point count overflow");
      if (visit) (*visit)(point);
      return;
    }
    const VarBounds& vb = bs.vars[level];
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    for (const Clause& c : vb.lower) {
      // cur[e] + coeff * x >= 0, coeff > 0  =>  x >= ceil(-cur[e]/coeff)
      const long long b = ceil_div(-cur[static_cast<size_t>(c.entry)], c.coeff);
      if (b > lo) lo = b;
    }
    for (const Clause& c : vb.upper) {
      // cur[e] + coeff * x >= 0, coeff < 0  =>  x <= floor(cur[e]/-coeff)
      const long long b = floor_div(cur[static_cast<size_t>(c.entry)], -c.coeff);
      if (b < hi) hi = b;
    }
    if (bs.clamp) {
      if (-*bs.clamp > lo) lo = -*bs.clamp;
      if (*bs.clamp < hi) hi = *bs.clamp;
    }
    if (lo > hi) return;

    for (auto& [e, c] : sparse[level]) cur[static_cast<size_t>(e)] += c * lo;
    for (long long x = lo;; ++x) {
      point[level] = x;
      const bool at_edge = bs.clamp && (x == -*bs.clamp || x == *bs.clamp);
      run(level + 1, on_boundary || at_edge);
      if (x == hi) break;
      for (auto& [e, c] : sparse[level]) cur[static_cast<size_t>(e)] += c;
    }
    for (auto& [e, c] : sparse[level]) cur[static_cast<size_t>(e)] -= c * hi;
  }
};

}  // namespace

CountResult count_points(const BoundSystem& bs) {
  Evaluator ev(bs, nullptr);
  if (!ev.statics_ok()) return {0, false};
  ev.run(0, false);
  return {ev.count, ev.touched};
}

void for_each_point(const BoundSystem& bs,
                    const std::function<void(const std::vector<long long>&)>& visit) {
  Evaluator ev(bs, &visit);
  if (!ev.statics_ok()) return;
  ev.run(0, false);
}

std::string describe(const BoundSystem& bs) {
  std::ostringstream out;
  if (!bs.static_entries.empty()) {
    out << "static entries:";
    for (int e : bs.static_entries) out << ' ' << e << "(=" << bs.init[static_cast<size_t>(e)] << ')';
    out << '\n';
  }
  for (const VarBounds& vb : bs.vars) {
    out << vb.id.name() << ": lower{";
    for (size_t c = 0; c < vb.lower.size(); ++c)
      out << (c ? "," : "") << "e" << vb.lower[c].entry;
    out << "} upper{";
    for (size_t c = 0; c < vb.upper.size(); ++c)
      out << (c ? "," : "") << "e" << vb.upper[c].entry;
    out << "}";
    if (bs.clamp) out << " clamp ±" << *bs.clamp;
    out << '\n';
  }
  return out.str();
}

}  // namespace sunmult
