#pragma once

// The odd-m coloring: five Kempe swaps from canonical, its closed form,
// the return maps F_c, the odometer, and the affine conjugacies psi_c.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "torus/core.hpp"
#include "torus/section_map.hpp"

namespace torus {

/// Canonical coloring followed by the swaps (0,1) on L_0, (0,2) on P_0,
/// (0,1) on P_0, (0,1) on L_1, (0,2) on P_1. Valid for every m >= 3.
DirectionAssignment five_swap_coloring(int m);

/// The same coloring written directly, layer by layer.
DirectionAssignment odd_closed_form(int m);

/// O(u,v) = (u+1, v + [u == 0]).
SectionMap odometer(int m);

/// F_c on P_0 in (i,k) coordinates, from the closed formulas.
SectionMap return_map_F(Color c, int m);

/// (-2)^{-1} mod m. Throws ModulusError for even m.
int lambda(int m);

/// psi_c with psi_c o F_c = O o psi_c. Throws ModulusError for even m.
AffineSectionMap psi(Color c, int m);

struct ShatterReport {
  int m = 0;
  std::array<std::size_t, 3> cycle_counts{};
  std::array<bool, 3> hamiltonian{};
  /// Section-level cycle lengths of F_2, split by parity of k.
  std::vector<std::size_t> odd_k_lengths;
  std::vector<std::size_t> even_k_lengths;
  /// "full_iteration" or "section".
  std::string method;
};

/// Cycle structure of odd_closed_form(m) for even m >= 4.
/// Counts on V directly when m <= 12, otherwise through the return maps.
ShatterReport even_shatter_analysis(int m);

struct ClockAndCarryReport {
  /// Sum of alpha(t) over t, each term reduced to [0, m).
  long long delta = 0;
  std::size_t orbit_length = 0;
  bool single_cycle = false;
};

/// F(i,k) = (i + alpha(k), k + d) with gcd(d,m) = 1. Throws StepNotUnit
/// otherwise, and TorusError if the direct decomposition disagrees.
ClockAndCarryReport clock_and_carry(int m, int d, const std::function<int(int)>& alpha);

}  // namespace torus
