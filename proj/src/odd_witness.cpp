#include "torus/odd_witness.hpp"

#include <algorithm>
#include <numeric>

#include "torus/kempe.hpp"

namespace torus {

DirectionAssignment five_swap_coloring(int m) {
  require_modulus(m, 3);
  DirectionAssignment a = canonical_assignment(m);
  a = kempe_swap(a, 0, 1, KempeSupport::line(m, 0));
  a = kempe_swap(a, 0, 2, KempeSupport::plane(m, 0));
  a = kempe_swap(a, 0, 1, KempeSupport::plane(m, 0));
  a = kempe_swap(a, 0, 1, KempeSupport::line(m, 1));
  a = kempe_swap(a, 0, 2, KempeSupport::plane(m, 1));
  return a;
}

DirectionAssignment odd_closed_form(int m) {
  require_modulus(m, 3);
  return DirectionAssignment::tabulate(m, [](const Vertex& v) {
    const int s = layer(v);
    const bool low = s == 0 || s == 1;
    const int d0 = (s == 0 && v.k != 0) ? 1 : (s == 1 ? 2 : 0);
    const int d1 = s == 0 ? 2 : ((s == 1 && v.k == 0) ? 0 : 1);
    const int d2 = (low && v.k == 0) ? 1 : (low ? 0 : 2);
    return DirectionTriple(d0, d1, d2);
  });
}

SectionMap odometer(int m) {
  require_modulus(m, 1);
  return SectionMap::from_function(m, [](Point2 p) { return Point2{p.a + 1, p.b + (p.a == 0)}; });
}

SectionMap return_map_F(Color c, int m) {
  require_modulus(m, 3);
  switch (c) {
    case 0:
      return SectionMap::from_function(m, [](Point2 p) {
        return Point2{p.a - 2 + (p.b == 0), p.b + 1};
      });
    case 1:
      return SectionMap::from_function(m, [m](Point2 p) {
        return Point2{p.a + (p.b == m - 1), p.b + 1};
      });
    case 2:
      return SectionMap::from_function(m, [](Point2 p) {
        return Point2{p.a + 2 - 2 * (p.b == 0), p.b - 2};
      });
    default:
      throw TorusError("colors must be 0, 1 or 2");
  }
}

int lambda(int m) {
  require_modulus(m, 1);
  const auto inv = mod_inverse(-2, m);
  if (!inv) throw ModulusError("(-2) has no inverse modulo even m = " + std::to_string(m));
  return *inv;
}

AffineSectionMap psi(Color c, int m) {
  require_modulus(m, 3);
  const long long l = lambda(m);
  IntMatrix2 linear;
  IntVector2 shift = IntVector2::Zero();
  switch (c) {
    case 0:
      linear << 0, 1, 1, 2;
      break;
    case 1:
      linear << 0, 1, 1, 0;
      shift << 1, 0;
      break;
    case 2:
      linear << 0, l, l, l;
      break;
    default:
      throw TorusError("colors must be 0, 1 or 2");
  }
  return AffineSectionMap(m, linear, shift);
}

ShatterReport even_shatter_analysis(int m) {
  require_modulus(m, 4);
  if (m % 2 != 0) throw ModulusError("shatter analysis needs even m, got " + std::to_string(m));
  const DirectionAssignment a = odd_closed_form(m);
  ShatterReport report;
  report.m = m;
  for (Color c = 0; c < 3; ++c) {
    std::size_t count = 0;
    if (m <= 12) {
      count = cycle_lengths(color_map(a, c)).size();
    } else {
      // Cycles of f_c correspond one to one with cycles of its return map.
      count = cycle_lengths(return_map_by_layers(a, c).table()).size();
    }
    report.cycle_counts[static_cast<std::size_t>(c)] = count;
    report.hamiltonian[static_cast<std::size_t>(c)] = count == 1;
  }
  report.method = m <= 12 ? "full_iteration" : "section";

  const SectionMap f2 = return_map_by_layers(a, 2);
  const auto dec = cycle_decomposition(f2.table());
  for (const auto& cycle : dec.cycles) {
    const int k = point_from_index(cycle.front(), m).b;
    (k % 2 == 1 ? report.odd_k_lengths : report.even_k_lengths).push_back(cycle.size());
  }
  return report;
}

ClockAndCarryReport clock_and_carry(int m, int d, const std::function<int(int)>& alpha) {
  require_modulus(m, 1);
  if (std::gcd(mod(d, m), m) != 1) {
    throw StepNotUnit("clock step " + std::to_string(d) + " is not a unit mod " + std::to_string(m));
  }
  ClockAndCarryReport report;
  for (int t = 0; t < m; ++t) report.delta += mod(alpha(t), m);
  const long long g = std::gcd(report.delta, static_cast<long long>(m));
  report.orbit_length = static_cast<std::size_t>(m) * m / static_cast<std::size_t>(g);
  report.single_cycle = g == 1;

  const SectionMap f = SectionMap::from_function(m, [&](Point2 p) {
    return Point2{p.a + alpha(p.b), p.b + d};
  });
  const auto lengths = cycle_lengths(f.table());
  const bool uniform = std::all_of(lengths.begin(), lengths.end(),
                                   [&](std::size_t len) { return len == report.orbit_length; });
  if (!uniform || (lengths.size() == 1) != report.single_cycle) {
    throw TorusError("clock-and-carry prediction disagrees with the direct decomposition");
  }
  return report;
}

}  // namespace torus
