#include "torus/witness_m4.hpp"

#include <algorithm>

#include "torus/kempe.hpp"

namespace torus {

namespace {

// Rows j = 0..3 within each i-block, columns k = 0..3.
constexpr std::array<std::string_view, 64> kTable{
    // i = 0
    "210", "012", "120", "021",
    "201", "021", "120", "210",
    "120", "012", "201", "210",
    "201", "201", "210", "102",
    // i = 1
    "120", "210", "120", "210",
    "102", "021", "201", "012",
    "021", "201", "210", "120",
    "210", "201", "012", "201",
    // i = 2
    "021", "210", "201", "021",
    "012", "201", "120", "210",
    "210", "120", "210", "102",
    "102", "102", "012", "210",
    // i = 3
    "021", "201", "012", "120",
    "210", "210", "120", "021",
    "201", "021", "201", "210",
    "201", "120", "201", "210",
};

}  // namespace

const std::array<std::string_view, 64>& m4_table() { return kTable; }

std::uint64_t m4_table_checksum() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::string_view word : kTable) {
    for (char ch : word) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

DirectionAssignment m4_assignment() {
  std::vector<std::array<int, 3>> raw;
  raw.reserve(kTable.size());
  for (std::string_view word : kTable) {
    const DirectionTriple t = DirectionTriple::parse(word);
    raw.push_back({t[0], t[1], t[2]});
  }
  return DirectionAssignment::from_raw(4, raw);
}

bool M4Report::all_hamiltonian() const {
  return std::all_of(orbits.begin(), orbits.end(),
                     [](const std::vector<Index>& o) { return o.size() == 64; });
}

M4Report verify_m4() {
  M4Report report;
  report.entries_valid = std::all_of(kTable.begin(), kTable.end(), [](std::string_view w) {
    return w.size() == 3 && DirectionTriple::is_permutation(w[0] - '0', w[1] - '0', w[2] - '0');
  });
  if (!report.entries_valid) return report;
  const DirectionAssignment a = m4_assignment();
  report.valid_coloring = is_valid_coloring(a).valid;
  for (Color c = 0; c < 3; ++c) {
    auto& orbit = report.orbits[static_cast<std::size_t>(c)];
    Index v = 0;
    do {
      orbit.push_back(v);
      v = a.step(c, v);
    } while (v != 0 && orbit.size() <= a.size());
  }
  if (report.valid_coloring) report.sign_product = sign_product(a);
  return report;
}

}  // namespace torus
