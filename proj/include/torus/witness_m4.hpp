#pragma once

// The embedded direction table for m = 4 and its finite audit.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "torus/core.hpp"

namespace torus {

/// The 64 words "d0d1d2", indexed by i*16 + j*4 + k.
const std::array<std::string_view, 64>& m4_table();

/// FNV-1a (64-bit) over the 192 concatenated table characters.
std::uint64_t m4_table_checksum();

DirectionAssignment m4_assignment();

struct M4Report {
  bool entries_valid = false;
  bool valid_coloring = false;
  /// Orbit of (0,0,0) for each color, as dense indices.
  std::array<std::vector<Index>, 3> orbits;
  int sign_product = 0;

  [[nodiscard]] bool all_hamiltonian() const;
};

M4Report verify_m4();

}  // namespace torus
