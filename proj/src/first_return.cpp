// First returns of R_c to the lane transversal, family-blocks and splices.

#include <algorithm>

#include "torus/route_e.hpp"

namespace torus {

namespace {

int centered(long long d, int m) {
  const int r = mod(d, m);
  return 2 * r > m ? r - m : r;
}

// An inclusive arithmetic run start, start+step, ..., stop.
struct Run {
  int start;
  int stop;
  int step;
};

Run single(int x) { return {x, x, 1}; }

std::vector<int> expand(const Run& r) {
  std::vector<int> out;
  if ((r.step > 0 && r.start > r.stop) || (r.step < 0 && r.start < r.stop)) return out;
  if ((r.stop - r.start) % r.step != 0) {
    throw BlockMismatch("run " + std::to_string(r.start) + ".." + std::to_string(r.stop) +
                        " step " + std::to_string(r.step) + " does not end on its stop");
  }
  for (int x = r.start;; x += r.step) {
    out.push_back(x);
    if (x == r.stop) break;
  }
  return out;
}

std::vector<std::vector<Run>> block_runs(Color c, int m) {
  switch (c) {
    case 2:
      return {{single(0), single(1)}, {{m - 1, 2, -1}}};
    case 1:
      switch (m % 6) {
        case 2:
          return {{single(0), single(2), {5, m - 3, 3}}, {{1, m - 1, 3}}, {{3, m - 2, 3}}};
        case 0:
          return {{single(0), single(2), {5, m - 1, 3}},
                  {{3, m - 3, 3}, single(1)},
                  {{4, m - 2, 3}}};
        default:
          return {{single(0), single(2), {5, m - 5, 6}, single(1)},
                  {{3, m - 1, 6}, {7, m - 3, 6}},
                  {{4, m - 2, 2}}};
      }
    case 0:
      if (m % 6 != 4) {
        return {{single(0), single(m - 2)}, {{1, m - 3, 2}}, {{2, m - 4, 2}}, {single(m - 1)}};
      }
      if (m % 12 == 10) {
        return {{single(0), single(m - 2), {5, m - 1, 4}, single(1)},
                {{4, m - 6, 4}},
                {{3, m - 3, 4}},
                {{2, m - 4, 4}}};
      }
      return {{single(0), single(m - 2), {5, m - 3, 4}},
              {{2, m - 6, 4}},
              {{3, m - 1, 4}, single(1)},
              {{4, m - 4, 4}}};
    default:
      throw TorusError("colors must be 0, 1 or 2");
  }
}

}  // namespace

bool LaneReturnData::complete() const {
  return std::all_of(lanes.begin(), lanes.end(), [](const Lane& l) { return l.target.has_value(); });
}

std::vector<Index> LaneReturnData::targets() const {
  std::vector<Index> out;
  out.reserve(lanes.size());
  for (const Lane& l : lanes) {
    if (!l.target) throw NoReturn(l.x, "no return within m^2 steps");
    out.push_back(static_cast<Index>(*l.target));
  }
  return out;
}

long long LaneReturnData::total_time() const {
  long long sum = 0;
  for (const Lane& l : lanes) sum += static_cast<long long>(l.time);
  return sum;
}

AffineSectionMap working_frame(Color c, int m) {
  if (c == 2) {
    IntMatrix2 w;
    w << 1, 0, 1, 1;
    return AffineSectionMap(m, w);
  }
  return bulk_frame(c).forward(m);
}

LaneReturnData first_return(Color c, int m, Variant variant) {
  require_route_e_modulus(m);
  if (c < 0 || c > 2) throw TorusError("colors must be 0, 1 or 2");
  const DirectionAssignment assign = route_e_assignment(m, variant);
  const SectionMap r = return_map_by_layers(assign, c);
  if (!(r == return_map_by_iteration(assign, c))) {
    throw TorusError("layer composition and m-step iteration disagree");
  }
  const AffineSectionMap frame = working_frame(c, m);
  const SectionMap rw = r.conjugate(frame.tabulate(), frame.inverse().tabulate());
  const Point2 generic = c == 2 ? Point2{1, -1} : Point2{0, 1};

  LaneReturnData data;
  data.m = m;
  data.color = c;
  data.variant = variant;
  data.transversal = c == 2 ? "(x,y) = (i, i+k), y = 0" : "bulk (u,t), t = 0";
  const std::size_t cap = static_cast<std::size_t>(m) * m;
  for (int x = 0; x < m; ++x) {
    Lane lane;
    lane.x = x;
    Point2 p{x, 0};
    while (lane.time < cap) {
      const Point2 q = rw(p);
      ++lane.time;
      const int dx = centered(q.a - p.a, m);
      const int dy = centered(q.b - p.b, m);
      if (dx != generic.a || dy != generic.b) lane.itinerary.push_back({p, dx, dy});
      if (q.b == 0) {
        lane.target = q.a;
        break;
      }
      p = q;
    }
    if (!lane.target && variant == Variant::actual) {
      throw NoReturn(x, "exceeded " + std::to_string(cap) + " steps");
    }
    data.lanes.push_back(std::move(lane));
  }

  if (variant == Variant::actual) {
    const LaneReturnData table = first_return_closed_form(c, m);
    for (int x = 0; x < m; ++x) {
      const Lane& got = data.lanes[static_cast<std::size_t>(x)];
      const Lane& want = table.lanes[static_cast<std::size_t>(x)];
      if (got.target != want.target || got.time != want.time) {
        throw TorusError("first return of color " + std::to_string(c) + " at m=" +
                         std::to_string(m) + ", lane " + std::to_string(x) +
                         " disagrees with the tabulated data");
      }
    }
  }
  return data;
}

SpliceResult splice_blocks(Color c, int m) {
  const auto lane_map = first_return(c, m).targets();
  return splice_blocks(c, m, lane_map);
}

SpliceResult splice_blocks(Color c, int m, std::span<const Index> lane_map) {
  require_route_e_modulus(m);
  if (lane_map.size() != static_cast<std::size_t>(m)) throw BlockMismatch("lane map has wrong size");
  SpliceResult result;
  for (const auto& runs : block_runs(c, m)) {
    std::vector<int> block;
    for (const Run& r : runs) {
      for (int x : expand(r)) block.push_back(x);
    }
    if (!block.empty()) result.blocks.push_back(std::move(block));
  }

  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (std::size_t j = 0; j < result.blocks.size(); ++j) {
    for (int x : result.blocks[j]) {
      if (x < 0 || x >= m || owner[static_cast<std::size_t>(x)] != -1) {
        throw BlockMismatch("blocks do not partition the lanes at " + std::to_string(x));
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(j);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw BlockMismatch("blocks do not cover every lane");
  }

  for (std::size_t j = 0; j < result.blocks.size(); ++j) {
    const auto& block = result.blocks[j];
    for (std::size_t n = 0; n + 1 < block.size(); ++n) {
      if (static_cast<int>(lane_map[static_cast<std::size_t>(block[n])]) != block[n + 1]) {
        throw BlockMismatch("T(" + std::to_string(block[n]) + ") does not continue block " +
                            std::to_string(j + 1));
      }
    }
    const int next = static_cast<int>(lane_map[static_cast<std::size_t>(block.back())]);
    const int target = owner[static_cast<std::size_t>(next)];
    if (result.blocks[static_cast<std::size_t>(target)].front() != next) {
      throw BlockMismatch("terminal of block " + std::to_string(j + 1) +
                          " does not enter a block at its initial point");
    }
    result.splice.push_back(target);
  }

  std::size_t length = 0;
  int j = 0;
  do {
    j = result.splice[static_cast<std::size_t>(j)];
    ++length;
  } while (j != 0 && length <= result.splice.size());
  result.single_cycle = j == 0 && length == result.splice.size();
  return result;
}

bool counting_check(const LaneReturnData& lanes) {
  if (!lanes.complete()) return false;
  const auto t = lanes.targets();
  if (find_collision(t)) return false;
  const auto lengths = cycle_lengths(t);
  const long long m = lanes.m;
  return lengths.size() == 1 && lengths.front() == static_cast<std::size_t>(m) &&
         lanes.total_time() == m * m;
}

}  // namespace torus
