// Piecewise return maps R_c on P_0 and the tabulated first-return data.

#include "torus/route_e.hpp"

namespace torus {

namespace {

bool within(int x, int lo, int hi) { return lo <= x && x <= hi; }

BranchImage r0_case1(int m, int i, int k) {
  const auto at = [&](int a, int b) { return i == a && k == b; };
  if (at(0, 0)) return {{i - 2, k}, 1};
  if (at(1, m - 1)) return {{i - 3, k + 3}, 2};
  if (at(m - 2, 0)) return {{i - 2, k + 2}, 3};
  if (at(m - 1, 1)) return {{i - 1, k}, 4};
  if (mod(i + k, m) == 1 && !at(1, 0)) return {{i - 3, k + 2}, 5};
  if ((k == 0 && within(i, 1, m - 3)) || at(0, m - 1) || at(m - 2, 1)) return {{i - 1, k + 1}, 6};
  return {{i - 2, k + 1}, 7};
}

BranchImage r0_case2(int m, int i, int k) {
  const auto at = [&](int a, int b) { return i == a && k == b; };
  if (at(0, 0)) return {{i - 2, k}, 1};
  if (at(m - 1, 1)) return {{i - 1, k}, 2};
  if (at(1, m - 1) || at(2, m - 2)) return {{i - 3, k + 3}, 3};
  if ((i == 1 && within(k, 0, m - 3)) || at(2, m - 1) || at(m - 2, 0)) return {{i - 2, k + 2}, 4};
  if (mod(i + k, m) == 1 && !at(1, 0) && !at(2, m - 1)) return {{i - 3, k + 2}, 5};
  if ((k == 0 && within(i, 2, m - 3)) || at(0, m - 1) || at(1, m - 2) || at(m - 2, 1)) {
    return {{i - 1, k + 1}, 6};
  }
  return {{i - 2, k + 1}, 7};
}

BranchImage r1_case1(int m, int i, int k) {
  const auto at = [&](int a, int b) { return i == a && k == b; };
  if ((mod(i + k, m) == m - 1 && within(i, 1, m - 3)) || at(0, 0) || at(m - 2, 0) ||
      at(m - 1, m - 1)) {
    return {{i + 2, k}, 1};
  }
  if ((i == 0 && within(k, 1, m - 2)) || at(1, m - 1) || at(m - 2, 1)) return {{i + 1, k}, 2};
  return {{i + 1, k + 1}, 3};
}

BranchImage r1_case2(int m, int i, int k) {
  const auto at = [&](int a, int b) { return i == a && k == b; };
  if ((mod(i + k, m) == m - 1 && within(i, 2, m - 3)) || at(0, 0) || at(1, 0) || at(m - 2, 0) ||
      at(m - 1, m - 1)) {
    return {{i + 2, k}, 1};
  }
  if ((i == 0 && within(k, 1, m - 2)) || (i == 1 && within(k, 1, m - 1)) || at(2, m - 2) ||
      at(2, m - 1) || at(m - 2, 1)) {
    return {{i + 1, k}, 2};
  }
  return {{i + 1, k + 1}, 3};
}

BranchImage r2_uniform(int m, int i, int k) {
  const auto at = [&](int a, int b) { return i == a && k == b; };
  if (at(2, 0)) return {{i + 1, k - 3}, 1};
  if (mod(i + k, m) == 1 && !at(1, 0) && !at(m - 1, 2)) return {{i + 2, k - 3}, 2};
  if ((k == mod(m - 1 - i, m) && i != m - 1) || at(m - 1, m - 1)) return {{i, k - 1}, 3};
  if ((k == 0 && i != 0 && i != 2 && i != m - 1) || at(m - 1, 1)) return {{i, k - 2}, 4};
  if ((i == m - 1 && k != 1 && k != m - 1) || at(0, 0)) return {{i + 1, k - 1}, 5};
  return {{i + 1, k - 2}, 6};
}

struct LaneEntry {
  int target;
  long long time;
};

LaneEntry color2_lane(int m, int x) {
  if (x == 0) return {1, 1};
  if (x == 1) return {m - 1, m - 1};
  if (x == 2) return {0, 2LL * m};
  return {x - 1, m};
}

LaneEntry color1_case1_lane(int m, int x) {
  if (x == 0) return {2, 1};
  if (x == m - 3) return {1, m + 3};
  if (x == m - 2) return {0, 1};
  if (x == m - 1) return {3, m + 3};
  return {x + 3, m + 2};
}

LaneEntry color1_case2_lane(int m, int x) {
  if (x == 0) return {2, 1};
  if (x == 1) return {3, 1};
  if (x == 2) return {5, m + 3};
  if (x == m - 2) return {0, 1};
  if (x == m - 3) return {4, m + 6};
  if (x == m - 1) return {7, m + 6};
  if (x % 2 == 0) return {x + 2, m + 2};
  return {x + 6, m + 4};
}

LaneEntry color0_case1_lane(int m, int x) {
  if (x == 0) return {m - 2, 1};
  if (x == m - 4) return {m - 1, m - 1};
  if (x == m - 3) return {2, 2LL * m - 3};
  if (x == m - 2) return {1, 2LL * m - 1};
  if (x == m - 1) return {0, m - 1};
  return {x + 2, m - 1};
}

LaneEntry color0_case2_lane(int m, int x) {
  if (x == 0) return {m - 2, 1};
  if (x == m - 6) return {3, 2LL * m - 4};
  if (x == m - 5) return {m - 1, m - 1};
  if (x == m - 4) return {0, m - 2};
  if (x == m - 3) return {2, 2LL * m - 3};
  if (x == m - 2) return {5, 2LL * m - 4};
  if (x == m - 1) return {1, m - 1};
  if (x == 1) return {4, m - 2};
  if (x == 2) return {6, m - 2};
  return {x + 4, m - 2};
}

}  // namespace

BranchImage closed_form_R_at(Color c, int m, Point2 ik) {
  require_route_e_modulus(m);
  const int i = mod(ik.a, m);
  const int k = mod(ik.b, m);
  const bool case2 = even_case(m) == EvenCase::II;
  BranchImage out;
  switch (c) {
    case 0:
      out = case2 ? r0_case2(m, i, k) : r0_case1(m, i, k);
      break;
    case 1:
      out = case2 ? r1_case2(m, i, k) : r1_case1(m, i, k);
      break;
    case 2:
      out = r2_uniform(m, i, k);
      break;
    default:
      throw TorusError("colors must be 0, 1 or 2");
  }
  out.image = {mod(out.image.a, m), mod(out.image.b, m)};
  return out;
}

SectionMap closed_form_R(Color c, int m) {
  require_route_e_modulus(m);
  return SectionMap::from_function(m, [c, m](Point2 p) { return closed_form_R_at(c, m, p).image; });
}

LaneReturnData first_return_closed_form(Color c, int m) {
  require_route_e_modulus(m);
  const bool case2 = even_case(m) == EvenCase::II;
  LaneReturnData data;
  data.m = m;
  data.color = c;
  data.variant = Variant::actual;
  data.transversal = c == 2 ? "(x,y) = (i, i+k), y = 0" : "bulk (u,t), t = 0";
  for (int x = 0; x < m; ++x) {
    LaneEntry e{};
    switch (c) {
      case 0:
        e = case2 ? color0_case2_lane(m, x) : color0_case1_lane(m, x);
        break;
      case 1:
        e = case2 ? color1_case2_lane(m, x) : color1_case1_lane(m, x);
        break;
      case 2:
        e = color2_lane(m, x);
        break;
      default:
        throw TorusError("colors must be 0, 1 or 2");
    }
    Lane lane;
    lane.x = x;
    lane.target = mod(e.target, m);
    lane.time = static_cast<std::size_t>(e.time);
    data.lanes.push_back(std::move(lane));
  }
  return data;
}

}  // namespace torus
