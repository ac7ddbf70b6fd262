// triangle.cpp — triangular coupling arrays and glued chains.
// SPDX-License-Identifier: MIT
#include "sunmult/triangle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sunmult {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void check_rank(int rank) {
  require(rank >= 1, "rank must be positive");
}

}  // namespace

int entry_count(int rank) {
  check_rank(rank);
  return 3 * rank * (rank + 1) / 2;
}

int row_count(int rank) {
  check_rank(rank);
  return 2 * rank;
}

int row_length(int rank, int row) {
  check_rank(rank);
  require(row >= 1 && row <= 2 * rank, "row out of range");
  return (row % 2 == 1) ? (row + 1) / 2 : row;
}

int row_offset(int rank, int row) {
  check_rank(rank);
  require(row >= 1 && row <= 2 * rank, "row out of range");
  const int t = (row + 1) / 2;  // segment index
  const int base = 3 * t * (t - 1) / 2;
  return (row % 2 == 1) ? base : base + t;
}

int position(int rank, int row, int col) {
  require(col >= 1 && col <= row_length(rank, row), "column out of range");
  return row_offset(rank, row) + col - 1;
}

int m_position(int rank, int i, int j) {
  check_rank(rank);
  require(i >= 1 && i < j && j <= rank + 1, "family index out of range");
  const int t = rank + 1 - j + i;
  const int k = rank + 2 - j;
  return position(rank, 2 * t - 1, k);
}

int n_position(int rank, int i, int j) {
  check_rank(rank);
  require(i >= 1 && i < j && j <= rank + 1, "family index out of range");
  return position(rank, 2 * (j - 1), 2 * i - 1);
}

int l_position(int rank, int i, int j) {
  check_rank(rank);
  require(i >= 1 && i < j && j <= rank + 1, "family index out of range");
  const int t = rank + 1 - i;
  return position(rank, 2 * t, 2 * (j - i));
}

int hexagon_count(int rank) {
  check_rank(rank);
  return rank * (rank - 1) / 2;
}

bool valid_hexagon(int rank, int i, int j) {
  return i >= 1 && j >= 1 && i + j <= rank;
}

HexagonPositions hexagon_positions(int rank, int i, int j) {
  require(valid_hexagon(rank, i, j), "invalid hexagon index");
  const int t = rank - i;
  HexagonPositions out;
  out.inner = {
      position(rank, 2 * t, 2 * j - 1),     position(rank, 2 * t, 2 * j),
      position(rank, 2 * t + 1, j),         position(rank, 2 * t + 1, j + 1),
      position(rank, 2 * t + 2, 2 * j),     position(rank, 2 * t + 2, 2 * j + 1),
  };
  const std::pair<int, int> candidates[] = {
      {2 * t - 1, j},     {2 * t, 2 * j - 2}, {2 * t, 2 * j + 1},
      {2 * t + 2, 2 * j - 1}, {2 * t + 2, 2 * j + 2}, {2 * t + 3, j + 1},
  };
  for (const auto& [row, col] : candidates) {
    if (row < 1 || row > row_count(rank)) continue;
    if (col < 1 || col > row_length(rank, row)) continue;
    out.outer.push_back(position(rank, row, col));
  }
  return out;
}

BZTriangle::BZTriangle(int rank) : rank_(rank) {
  e_.assign(static_cast<size_t>(entry_count(rank)), 0);
}

long long BZTriangle::entry(int row, int col) const {
  return e_[static_cast<size_t>(position(rank_, row, col))];
}

long long& BZTriangle::entry(int row, int col) {
  return e_[static_cast<size_t>(position(rank_, row, col))];
}

long long BZTriangle::m(int i, int j) const {
  return e_[static_cast<size_t>(m_position(rank_, i, j))];
}

long long BZTriangle::n(int i, int j) const {
  return e_[static_cast<size_t>(n_position(rank_, i, j))];
}

long long BZTriangle::l(int i, int j) const {
  return e_[static_cast<size_t>(l_position(rank_, i, j))];
}

Weight face_weight(const BZTriangle& t, Face f) {
  const int r = t.rank();
  Weight w = zero_weight(r);
  switch (f) {
    case Face::first:
      for (int s = 1; s <= r; ++s)
        w.labels[static_cast<size_t>(s) - 1] = t.entry(2 * s - 1, 1) + t.entry(2 * s, 1);
      break;
    case Face::second:
      for (int p = 1; p <= r; ++p)
        w.labels[static_cast<size_t>(p) - 1] = t.entry(2 * r, 2 * p - 1) + t.entry(2 * r, 2 * p);
      break;
    case Face::third:
      for (int s = 1; s <= r; ++s) {
        const int seg = r + 1 - s;
        w.labels[static_cast<size_t>(s) - 1] =
            t.entry(2 * seg - 1, seg) + t.entry(2 * seg, 2 * seg);
      }
      break;
  }
  return w;
}

BZTriangle initial_triangle(const Weight& lambda, const Weight& mu, const Weight& third) {
  const int r = lambda.rank();
  const CouplingParams cp = coupling_params(lambda, mu, third);
  BZTriangle out(r);
  for (int t = 1; t <= r; ++t) {
    for (int k = 1; k < t; ++k) out.entry(2 * t - 1, k) = lambda.label(t);
    out.entry(2 * t - 1, t) = cp.Nprime[static_cast<size_t>(r - t)];
    for (int p = 1; p < t; ++p) {
      out.entry(2 * t, 2 * p - 1) = 0;
      out.entry(2 * t, 2 * p) = mu.label(p);
    }
    out.entry(2 * t, 2 * t - 1) = cp.n[static_cast<size_t>(r - t)];
    out.entry(2 * t, 2 * t) = cp.N[static_cast<size_t>(r - t)];
  }
  return out;
}

BZTriangle virtual_triangle(int rank, int i, int j) {
  const HexagonPositions hp = hexagon_positions(rank, i, j);
  BZTriangle out(rank);
  for (int pos : hp.inner) out.entries()[static_cast<size_t>(pos)] = -1;
  for (int pos : hp.outer) out.entries()[static_cast<size_t>(pos)] = 1;
  return out;
}

namespace {

// Adds coeff * virtual_triangle(i,j) for every map entry; stray keys throw.
void apply_hexagons(BZTriangle& t, const std::map<std::pair<int, int>, long long>& v) {
  const int r = t.rank();
  for (const auto& [ij, coeff] : v) {
    require(valid_hexagon(r, ij.first, ij.second), "invalid hexagon index in coefficients");
    if (coeff == 0) continue;
    const HexagonPositions hp = hexagon_positions(r, ij.first, ij.second);
    for (int pos : hp.inner) t.entries()[static_cast<size_t>(pos)] -= coeff;
    for (int pos : hp.outer) t.entries()[static_cast<size_t>(pos)] += coeff;
  }
}

void apply_increment(BZTriangle& t, const BZTriangle& inc, long long coeff) {
  for (size_t e = 0; e < t.entries().size(); ++e)
    t.entries()[e] += coeff * inc.entries()[e];
}

}  // namespace

BZTriangle reconstruct_triangle(const Weight& lambda, const Weight& mu, const Weight& third,
                                const CoefficientVector3& cv) {
  BZTriangle out = initial_triangle(lambda, mu, third);
  require(cv.rank == 0 || cv.rank == out.rank(), "coefficient rank mismatch");
  apply_hexagons(out, cv.v);
  return out;
}

bool is_true_triangle(const BZTriangle& t) {
  return std::all_of(t.entries().begin(), t.entries().end(),
                     [](long long x) { return x >= 0; });
}

std::optional<std::string> hexagon_violation(const BZTriangle& t) {
  const int r = t.rank();
  for (int i = 1; i <= r - 1; ++i) {
    for (int j = 1; i + j <= r; ++j) {
      const int seg = r - i;
      const long long A = t.entry(2 * seg, 2 * j - 1);
      const long long B = t.entry(2 * seg, 2 * j);
      const long long C = t.entry(2 * seg + 1, j);
      const long long D = t.entry(2 * seg + 1, j + 1);
      const long long E = t.entry(2 * seg + 2, 2 * j);
      const long long F = t.entry(2 * seg + 2, 2 * j + 1);
      if (C + A != D + F || B + D != C + E || E + F != A + B) {
        std::ostringstream msg;
        msg << "hexagon (" << i << "," << j << "): opposite-edge sums differ";
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

BZTriangle rotate120(const BZTriangle& t) {
  const int r = t.rank();
  BZTriangle out(r);
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r + 1; ++j) {
      out.entries()[static_cast<size_t>(m_position(r, i, j))] =
          t.entries()[static_cast<size_t>(n_position(r, i, j))];
      out.entries()[static_cast<size_t>(n_position(r, i, j))] =
          t.entries()[static_cast<size_t>(l_position(r, i, j))];
      out.entries()[static_cast<size_t>(l_position(r, i, j))] =
          t.entries()[static_cast<size_t>(m_position(r, i, j))];
    }
  }
  return out;
}

BZTriangle third_face_increment(int rank, int i) {
  check_rank(rank);
  require(i >= 1 && i <= rank, "simple root index out of range");
  return initial_triangle(zero_weight(rank), zero_weight(rank), simple_root(rank, i));
}

BZTriangle first_face_increment(int rank, int i) {
  return rotate120(rotate120(third_face_increment(rank, i)));
}

std::pair<BZTriangle, BZTriangle> gluing_root(int rank, int i) {
  check_rank(rank);
  require(i >= 1 && i <= rank, "gluing root index out of range");
  return {third_face_increment(rank, i), third_face_increment(rank, rank + 1 - i)};
}

GluedDiagram initial_diagram(const Weight& lambda, const Weight& mu, const Weight& nu,
                             const Weight& sigma) {
  const int r = lambda.rank();
  require(mu.rank() == r && nu.rank() == r && sigma.rank() == r,
          "rank mismatch in diagram construction");
  require(root_lattice_check({lambda, mu, nu, sigma}).has_value(),
          "weights do not sum into the root lattice");
  const Weight shared = nu + sigma;
  GluedDiagram d;
  d.rank = r;
  d.triangles.push_back(initial_triangle(lambda, mu, shared));
  d.triangles.push_back(initial_triangle(nu, sigma, conjugate(shared)));
  d.gluings.push_back({{0, Face::third}, {1, Face::third}});
  return d;
}

GluedDiagram reconstruct_diagram(const Weight& lambda, const Weight& mu, const Weight& nu,
                                 const Weight& sigma, const CoefficientVector4& cv) {
  GluedDiagram d = initial_diagram(lambda, mu, nu, sigma);
  const int r = d.rank;
  require(cv.rank == 0 || cv.rank == r, "coefficient rank mismatch");
  require(cv.g.empty() || static_cast<int>(cv.g.size()) == r,
          "gluing coefficient count must equal the rank");
  apply_hexagons(d.triangles[0], cv.v1);
  apply_hexagons(d.triangles[1], cv.v2);
  for (int i = 1; i <= static_cast<int>(cv.g.size()); ++i) {
    const long long g = cv.g[static_cast<size_t>(i) - 1];
    if (g == 0) continue;
    const auto [left, right] = gluing_root(r, i);
    apply_increment(d.triangles[0], left, -g);
    apply_increment(d.triangles[1], right, -g);
  }
  return d;
}

bool is_true_diagram(const GluedDiagram& d) {
  return std::all_of(d.triangles.begin(), d.triangles.end(),
                     [](const BZTriangle& t) { return is_true_triangle(t); });
}

std::optional<std::string> structural_violation(const GluedDiagram& d) {
  for (size_t a = 0; a < d.triangles.size(); ++a) {
    if (auto v = hexagon_violation(d.triangles[a])) {
      return "triangle " + std::to_string(a + 1) + ": " + *v;
    }
  }
  for (size_t k = 0; k < d.gluings.size(); ++k) {
    const Gluing& g = d.gluings[k];
    const Weight wa = face_weight(d.triangles[static_cast<size_t>(g.a.triangle)], g.a.face);
    const Weight wb = face_weight(d.triangles[static_cast<size_t>(g.b.triangle)], g.b.face);
    if (conjugate(wa) != wb) {
      return "gluing " + std::to_string(k + 1) + ": face weights are not mutually conjugate";
    }
  }
  return std::nullopt;
}

std::string to_text(const BZTriangle& t) {
  const int r = t.rank();
  int cell = 1;
  for (long long x : t.entries())
    cell = std::max(cell, static_cast<int>(std::to_string(x).size()));

  std::ostringstream out;
  const int bottom = row_length(r, 2 * r);
  for (int row = 1; row <= 2 * r; ++row) {
    const int len = row_length(r, row);
    const int pad = (bottom - len) * (cell + 1) / 2;
    out << std::string(static_cast<size_t>(pad), ' ');
    for (int col = 1; col <= len; ++col) {
      if (col > 1) out << ' ';
      std::string s = std::to_string(t.entry(row, col));
      out << std::string(static_cast<size_t>(cell) - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const GluedDiagram& d) {
  std::ostringstream out;
  for (size_t a = 0; a < d.triangles.size(); ++a) {
    out << "triangle " << (a + 1) << ":\n" << to_text(d.triangles[a]);
  }
  return out.str();
}

std::string to_machine(const BZTriangle& t) {
  std::ostringstream out;
  out << t.rank() << ' ' << 3;
  for (long long x : t.entries()) out << ' ' << x;
  return out.str();
}

std::string to_machine(const GluedDiagram& d) {
  std::ostringstream out;
  out << d.rank << ' ' << d.points();
  for (const BZTriangle& t : d.triangles)
    for (long long x : t.entries()) out << ' ' << x;
  return out.str();
}

namespace {

std::vector<long long> read_numbers(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> out;
  long long x = 0;
  while (in >> x) out.push_back(x);
  std::string rest;
  require(!(in.clear(), in >> rest), "trailing tokens in machine text");
  return out;
}

BZTriangle read_triangle(const std::vector<long long>& nums, int rank, size_t offset) {
  BZTriangle t(rank);
  for (size_t e = 0; e < t.entries().size(); ++e) t.entries()[e] = nums[offset + e];
  return t;
}

}  // namespace

BZTriangle triangle_from_machine(const std::string& text) {
  const std::vector<long long> nums = read_numbers(text);
  require(nums.size() >= 2, "machine text too short");
  const int rank = static_cast<int>(nums[0]);
  check_rank(rank);
  require(nums[1] == 3, "machine text does not describe a single triangle");
  require(nums.size() == 2 + static_cast<size_t>(entry_count(rank)),
          "machine text entry count mismatch");
  return read_triangle(nums, rank, 2);
}

GluedDiagram diagram_from_machine(const std::string& text) {
  const std::vector<long long> nums = read_numbers(text);
  require(nums.size() >= 2, "machine text too short");
  const int rank = static_cast<int>(nums[0]);
  check_rank(rank);
  const int points = static_cast<int>(nums[1]);
  require(points >= 4, "a glued chain needs at least four points");
  const size_t per = static_cast<size_t>(entry_count(rank));
  require(nums.size() == 2 + per * static_cast<size_t>(points - 2),
          "machine text entry count mismatch");
  GluedDiagram d;
  d.rank = rank;
  for (int a = 0; a < points - 2; ++a)
    d.triangles.push_back(read_triangle(nums, rank, 2 + per * static_cast<size_t>(a)));
  for (int k = 0; k < points - 3; ++k) {
    if (k == 0)
      d.gluings.push_back({{0, Face::third}, {1, Face::third}});
    else
      d.gluings.push_back({{k, Face::first}, {k + 1, Face::third}});
  }
  return d;
}

}  // namespace sunmult
