// weights.cpp — Dynkin-label weight arithmetic for su(r+1).
// SPDX-License-Identifier: MIT
#include "sunmult/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sunmult {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

long long Weight::label(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("weight label index out of range");
  return labels[static_cast<size_t>(i) - 1];
}

long long DualLabels::numerator(int i) const {
  if (i < 1 || i > rank) throw std::out_of_range("dual label index out of range");
  return numerators[static_cast<size_t>(i) - 1];
}

Weight conjugate(const Weight& w) {
  Weight out = w;
  std::reverse(out.labels.begin(), out.labels.end());
  return out;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.labels.begin(), w.labels.end(), [](long long x) { return x >= 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  require(a.rank() == b.rank(), "rank mismatch in weight addition");
  Weight out = a;
  for (int i = 0; i < a.rank(); ++i) out.labels[i] += b.labels[i];
  return out;
}

Weight zero_weight(int rank) {
  require(rank >= 1, "rank must be positive");
  return Weight(std::vector<long long>(static_cast<size_t>(rank), 0));
}

Weight simple_root(int rank, int i) {
  require(rank >= 1, "rank must be positive");
  require(i >= 1 && i <= rank, "simple root index out of range");
  Weight out = zero_weight(rank);
  out.labels[i - 1] = 2;
  if (i - 2 >= 0) out.labels[i - 2] = -1;
  if (i < rank) out.labels[i] = -1;
  return out;
}

DualLabels dual_labels(const Weight& w) {
  const int r = w.rank();
  require(r >= 1, "rank must be positive");
  DualLabels out;
  out.rank = r;
  out.denominator = r + 1;
  out.numerators.assign(static_cast<size_t>(r), 0);
  for (int i = 1; i <= r; ++i) {
    long long acc = 0;
    for (int j = 1; j <= r; ++j) {
      const long long coeff =
          static_cast<long long>(r + 1) * std::min(i, j) - static_cast<long long>(i) * j;
      acc += coeff * w.labels[j - 1];
    }
    out.numerators[i - 1] = acc;
  }
  return out;
}

std::optional<std::vector<long long>> root_lattice_check(const std::vector<Weight>& ws) {
  require(!ws.empty(), "root lattice check needs at least one weight");
  const int r = ws.front().rank();
  require(r >= 1, "rank must be positive");
  for (const Weight& w : ws) require(w.rank() == r, "rank mismatch in root lattice check");

  std::vector<long long> sums(static_cast<size_t>(r), 0);
  for (const Weight& w : ws) {
    const DualLabels d = dual_labels(w);
    for (int i = 0; i < r; ++i) sums[i] += d.numerators[i];
  }
  std::vector<long long> m(static_cast<size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    if (sums[i] % (r + 1) != 0) return std::nullopt;
    m[i] = sums[i] / (r + 1);
  }
  return m;
}

CouplingParams coupling_params(const Weight& lambda, const Weight& mu, const Weight& third) {
  const int r = lambda.rank();
  require(r >= 1, "rank must be positive");
  require(mu.rank() == r && third.rank() == r, "rank mismatch in coupling parameters");

  const DualLabels dl = dual_labels(lambda);
  const DualLabels dm = dual_labels(mu);
  const DualLabels dt = dual_labels(third);

  CouplingParams out;
  out.rank = r;
  out.n.assign(static_cast<size_t>(r), 0);
  out.N.assign(static_cast<size_t>(r), 0);
  out.Nprime.assign(static_cast<size_t>(r), 0);

  for (int i = 1; i <= r; ++i) {
    const long long num = dl.numerator(r - i + 1) + dm.numerator(r - i + 1) - dt.numerator(i);
    if (num % (r + 1) != 0) throw std::invalid_argument("not in root lattice");
    out.n[i - 1] = num / (r + 1);
  }
  for (int i = 1; i <= r; ++i) {
    const long long prev = (i > 1) ? out.n[i - 2] : 0;
    out.N[i - 1] = prev - out.n[i - 1] + mu.label(r - i + 1);
    out.Nprime[i - 1] = third.label(i) - out.N[i - 1];
  }
  return out;
}

std::vector<Weight> dominant_weights_below(const Weight& base) {
  require(is_dominant(base), "support enumeration requires a dominant weight");
  const int r = base.rank();
  const DualLabels d = dual_labels(base);
  // Box bounds: subtracting m_i copies of root i lowers the i-th root
  // coordinate by exactly m_i, which must stay non-negative for the result
  // to be dominant.
  std::vector<long long> box(static_cast<size_t>(r), 0);
  for (int i = 0; i < r; ++i) box[i] = d.numerators[i] / (r + 1);  // floor; numerators >= 0

  std::vector<Weight> out;
  std::vector<long long> m(static_cast<size_t>(r), 0);
  while (true) {
    Weight cand = base;
    for (int i = 1; i <= r; ++i) {
      if (m[i - 1] == 0) continue;
      cand.labels[i - 1] -= 2 * m[i - 1];
      if (i - 2 >= 0) cand.labels[i - 2] += m[i - 1];
      if (i < r) cand.labels[i] += m[i - 1];
    }
    if (is_dominant(cand)) out.push_back(std::move(cand));
    int k = 0;
    while (k < r && m[k] == box[k]) m[k++] = 0;
    if (k == r) break;
    ++m[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

long long parse_integer(const std::string& token) {
  const std::string t = trim(token);
  require(!t.empty(), "empty label in weight text");
  size_t consumed = 0;
  long long value = 0;
  try {
    value = std::stoll(t, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed label '" + t + "' in weight text");
  }
  require(consumed == t.size(), "trailing characters after label in weight text");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  const std::vector<std::string> tokens = split(text, ',');
  require(!tokens.empty() && !trim(text).empty(), "empty weight text");
  Weight w;
  for (const std::string& tok : tokens) w.labels.push_back(parse_integer(tok));
  return w;
}

std::vector<Weight> parse_weight_list(const std::string& text) {
  const std::vector<std::string> parts = split(text, ';');
  require(!parts.empty() && !trim(text).empty(), "empty weight list");
  std::vector<Weight> ws;
  ws.reserve(parts.size());
  for (const std::string& part : parts) ws.push_back(parse_weight(part));
  const int r = ws.front().rank();
  for (const Weight& w : ws) require(w.rank() == r, "weights in a list must share one rank");
  return ws;
}

std::string format_weight(const Weight& w) {
  std::ostringstream out;
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out << ',';
    out << w.labels[i];
  }
  return out.str();
}

std::string format_weight_list(const std::vector<Weight>& ws) {
  std::ostringstream out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out << ';';
    out << format_weight(ws[i]);
  }
  return out.str();
}

}  // namespace sunmult
