// triangle.hpp — triangular integer arrays encoding three-weight couplings,
// and chains of such triangles glued along shared faces.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunmult/weights.hpp"

namespace sunmult {

// ---------------------------------------------------------------------------
// Entry layout.
//
// A rank-r triangle stores E_r = 3r(r+1)/2 integers in 2r rows, numbered
// 1..2r from the apex down. For each segment t = 1..r there is an "m-row"
// (row 2t-1, t entries) followed by an "nl-row" (row 2t, 2t entries); columns
// start at 1.
//
// Entries carry a three-family identification m/n/l over index pairs
// 1 <= i < j <= r+1:
//   m-row t, column k     holds m[t+1-k][r+2-k]    (k = 1..t, left edge family)
//   nl-row t, column 2p-1 holds n[p][t+1]          (p = 1..t)
//   nl-row t, column 2p   holds l[r+1-t][r+1-t+p]  (p = 1..t)
// The m family reads along the left edge, n along the bottom-left diagonals,
// l along the bottom-right; each family has r(r+1)/2 members.
// ---------------------------------------------------------------------------

int entry_count(int rank);              // 3r(r+1)/2
int row_count(int rank);                // 2r
int row_length(int rank, int row);      // entries in the given row
int row_offset(int rank, int row);      // linear index of (row, 1)
int position(int rank, int row, int col);  // linear index, bounds-checked

// Linear positions of family members (1 <= i < j <= r+1).
int m_position(int rank, int i, int j);
int n_position(int rank, int i, int j);
int l_position(int rank, int i, int j);

// Number of interior hexagons H_r = r(r-1)/2; hexagon indices (i,j) satisfy
// i,j >= 1 and i+j <= r.
int hexagon_count(int rank);
bool valid_hexagon(int rank, int i, int j);

// The six entry positions surrounded by hexagon (i,j) ("inner", always in
// range) and the up-to-six positions adjacent to its outward corners
// ("outer"; positions falling outside the triangle are dropped).
struct HexagonPositions {
  std::vector<int> inner;  // size 6
  std::vector<int> outer;  // size <= 6
};
HexagonPositions hexagon_positions(int rank, int i, int j);

// A triangular array of integers. Structure (row layout) is fixed by the
// rank; entry values are unconstrained at this level — constraint checks are
// separate functions.
class BZTriangle {
 public:
  BZTriangle() = default;
  explicit BZTriangle(int rank);

  int rank() const { return rank_; }
  long long entry(int row, int col) const;
  long long& entry(int row, int col);
  long long m(int i, int j) const;
  long long n(int i, int j) const;
  long long l(int i, int j) const;
  const std::vector<long long>& entries() const { return e_; }
  std::vector<long long>& entries() { return e_; }

  bool operator==(const BZTriangle&) const = default;

 private:
  int rank_ = 0;
  std::vector<long long> e_;
};

// Hexagon-coefficient vector for a single triangle: hexagon (i,j) -> integer.
struct CoefficientVector3 {
  int rank = 0;
  std::map<std::pair<int, int>, long long> v;
};

// Coordinates of a two-triangle glued arrangement: hexagon coefficients for
// both triangles plus r gluing coefficients g_1..g_r (g[i-1] = g_i). Total
// coordinate count 2·H_r + r = r².
struct CoefficientVector4 {
  int rank = 0;
  std::map<std::pair<int, int>, long long> v1;
  std::map<std::pair<int, int>, long long> v2;
  std::vector<long long> g;
};

// A face of a triangle: `first` reads down the left edge, `second` across
// the bottom, `third` up the right edge.
enum class Face { first, second, third };

struct FaceRef {
  int triangle = 0;  // 0-based index into GluedDiagram::triangles
  Face face = Face::third;
};

struct Gluing {
  FaceRef a, b;
};

// A string-like chain of triangles joined along face pairs. points() = P
// external weights correspond to P-2 triangles and P-3 gluings.
struct GluedDiagram {
  int rank = 0;
  std::vector<BZTriangle> triangles;
  std::vector<Gluing> gluings;

  int points() const { return static_cast<int>(triangles.size()) + 2; }
};

// The weight induced on a face by adjacent boundary-entry sums.
Weight face_weight(const BZTriangle& t, Face f);

// ---------------------------------------------------------------------------
// Constructors.
// ---------------------------------------------------------------------------

// The distinguished representative of the coupling (lambda, mu, third):
// m-row t carries lambda_t in columns 1..t-1 and N'_{r-t+1} in column t;
// nl-row t alternates 0, mu_1, 0, mu_2, ... and ends with n_{r-t+1},
// N_{r-t+1}. Satisfies every hexagon identity and induces exactly the three
// given face weights; entries may be negative. Throws std::invalid_argument
// when the coupling parameters are non-integral.
BZTriangle initial_triangle(const Weight& lambda, const Weight& mu, const Weight& third);

// The elementary zero-weight triangle of hexagon (i,j): -1 on the six inner
// positions, +1 on the in-range outer positions, 0 elsewhere. These span the
// space of entry arrays with all-zero face weights.
BZTriangle virtual_triangle(int rank, int i, int j);

// initial_triangle plus the hexagon-coefficient combination of virtual
// triangles, entrywise.
BZTriangle reconstruct_triangle(const Weight& lambda, const Weight& mu, const Weight& third,
                                const CoefficientVector3& cv);

// True iff every entry is >= 0.
bool is_true_triangle(const BZTriangle& t);

// Empty when all hexagon identities hold; otherwise a description of the
// first violated identity.
std::optional<std::string> hexagon_violation(const BZTriangle& t);

// Cyclic relabeling m -> n -> l -> m (positionally): the result induces face
// weights (second, third, first) of the input. Applying it three times is
// the identity.
BZTriangle rotate120(const BZTriangle& t);

// Zero-weight increment patterns that shift one face weight by simple root
// alpha_i while leaving the other two faces unchanged.
BZTriangle third_face_increment(int rank, int i);
BZTriangle first_face_increment(int rank, int i);

// The basis increment of the i-th gluing coefficient for a pair of triangles
// glued third-face to third-face: alpha_i on the left triangle's third face,
// alpha_{r+1-i} on the right one's. Reconstruction subtracts g_i times this
// pair.
std::pair<BZTriangle, BZTriangle> gluing_root(int rank, int i);

// The two-triangle chain for the coupling (lambda, mu, nu, sigma): the
// triangle of (lambda, mu, nu+sigma) glued to that of (nu, sigma,
// conjugate(nu+sigma)) along their third faces. Throws std::invalid_argument
// when the four weights fail the root-lattice test.
GluedDiagram initial_diagram(const Weight& lambda, const Weight& mu, const Weight& nu,
                             const Weight& sigma);

// initial_diagram plus hexagon combinations on each triangle MINUS the
// gluing-root combination: g_i shifts the shared face pair by -g_i times
// (alpha_i, alpha_{r+1-i}).
GluedDiagram reconstruct_diagram(const Weight& lambda, const Weight& mu, const Weight& nu,
                                 const Weight& sigma, const CoefficientVector4& cv);

// True iff every entry of every constituent triangle is >= 0.
bool is_true_diagram(const GluedDiagram& d);

// Empty when every triangle passes its hexagon identities and the two faces
// of every gluing induce mutually conjugate weights.
std::optional<std::string> structural_violation(const GluedDiagram& d);

// ---------------------------------------------------------------------------
// Text formats.
// ---------------------------------------------------------------------------

// Human-readable centered row layout.
std::string to_text(const BZTriangle& t);
std::string to_text(const GluedDiagram& d);

// Machine format: "<rank> <points> <entries...>", entries row-major, one
// triangle after another (points = 3 for a lone triangle). Parsers rebuild
// the canonical chain gluing structure and validate sizes.
std::string to_machine(const BZTriangle& t);
std::string to_machine(const GluedDiagram& d);
BZTriangle triangle_from_machine(const std::string& text);
GluedDiagram diagram_from_machine(const std::string& text);

}  // namespace sunmult
