// test_bounds.cpp — nested-interval derivation and point counting on
// hand-built constraint systems with known answers.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sunmult/bounds.hpp"

using namespace sunmult;

namespace {

VarId hex(int i, int j, int block = 0) {
  return VarId{VarId::Kind::hexagon, block, i, j};
}

}  // namespace

TEST_CASE("single variable interval") {
  // entry0 = 5 - x >= 0, entry1 = 3 + x >= 0  =>  x in [-3, 5].
  const BoundSystem bs = derive_bounds({5, 3}, {{-1, 1}}, {hex(1, 1)});
  CHECK(count_points(bs).count == 9);

  std::vector<long long> seen;
  for_each_point(bs, [&](const std::vector<long long>& x) { seen.push_back(x[0]); });
  REQUIRE(seen.size() == 9);
  CHECK(seen.front() == -3);
  CHECK(seen.back() == 5);
  for (std::size_t k = 1; k < seen.size(); ++k) CHECK(seen[k] == seen[k - 1] + 1);
}

TEST_CASE("dependent second variable") {
  // 0 <= x <= 4, 0 <= y <= 6 - x: 7+6+5+4+3 = 25 points.
  const std::vector<long long> init{4, 0, 6, 0};
  const std::vector<std::vector<long long>> cols{{-1, 1, -1, 0}, {0, 0, -1, 1}};
  const BoundSystem bs = derive_bounds(init, cols, {hex(1, 1), hex(1, 2)});
  CHECK(count_points(bs).count == 25);

  std::vector<std::vector<long long>> pts;
  for_each_point(bs, [&](const std::vector<long long>& x) { pts.push_back(x); });
  REQUIRE(pts.size() == 25);
  CHECK(pts[0] == std::vector<long long>{0, 0});
  CHECK(pts[6] == std::vector<long long>{0, 6});
  CHECK(pts[7] == std::vector<long long>{1, 0});
  CHECK(pts.back() == std::vector<long long>{4, 2});
}

TEST_CASE("static entries decide emptiness") {
  // Third entry touched by no variable.
  const BoundSystem ok = derive_bounds({5, 3, 2}, {{-1, 1, 0}}, {hex(1, 1)});
  CHECK(ok.static_entries == std::vector<int>{2});
  CHECK(count_points(ok).count == 9);
  const BoundSystem empty = derive_bounds({5, 3, -1}, {{-1, 1, 0}}, {hex(1, 1)});
  CHECK(count_points(empty).count == 0);
}

TEST_CASE("strict derivation requires both bound directions") {
  // Only an upper clause for x: rejected without a clamp.
  CHECK_THROWS_AS(derive_bounds({5}, {{-1}}, {hex(1, 1)}), std::logic_error);
  // With a clamp the missing direction comes from the box.
  const BoundSystem bs = derive_bounds({5}, {{-1}}, {hex(1, 1)}, 7);
  const CountResult res = count_points(bs);
  CHECK(res.count == 13);  // [-7, 5]
  CHECK(res.touched_clamp);
}

TEST_CASE("clamp truncates and flags boundary contact") {
  const std::vector<long long> init{4, 0, 6, 0};
  const std::vector<std::vector<long long>> cols{{-1, 1, -1, 0}, {0, 0, -1, 1}};
  const CountResult res = count_points(derive_bounds(init, cols, {hex(1, 1), hex(1, 2)}, 3));
  CHECK(res.count == 16);  // x in [0,3], y in [0, min(6-x, 3)]
  CHECK(res.touched_clamp);
  // A roomy clamp changes nothing and stays untouched.
  const CountResult wide =
      count_points(derive_bounds(init, cols, {hex(1, 1), hex(1, 2)}, 100));
  CHECK(wide.count == 25);
  CHECK_FALSE(wide.touched_clamp);
}

TEST_CASE("non-unit coefficients round correctly") {
  // 5 - 2x >= 0 and 1 + 2x >= 0  =>  x in [0, 2].
  const BoundSystem bs = derive_bounds({5, 1}, {{-2, 2}}, {hex(1, 1)});
  CHECK(count_points(bs).count == 3);
  std::vector<long long> seen;
  for_each_point(bs, [&](const std::vector<long long>& x) { seen.push_back(x[0]); });
  CHECK(seen == std::vector<long long>{0, 1, 2});
}

TEST_CASE("clause description names the variables") {
  const BoundSystem bs = derive_bounds({5, 3}, {{-1, 1}}, {hex(1, 1)});
  const std::string text = describe(bs);
  CHECK(text.find("v1[1,1]") != std::string::npos);
  CHECK(VarId{VarId::Kind::gluing, 0, 2, 0}.name() == "g[2]");
  CHECK(VarId{VarId::Kind::gluing, 1, 2, 0}.name() == "g2[2]");
  CHECK(hex(2, 1, 1).name() == "v2[2,1]");
}
