#pragma once

// Dispatch to the right construction for each m, certificates, and an
// independent re-verification pipeline.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torus/core.hpp"

namespace torus {

enum class CaseTag { odd, m4, even_case_I, even_case_II };

std::string_view case_tag_name(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view name);
/// The construction used for m (m >= 3).
CaseTag case_for_modulus(int m);

struct ColorCertificate {
  Color color = 0;
  bool passed = false;
  /// Orbit length of (0,0,0) on V (direct_iteration).
  std::size_t orbit_length = 0;
  /// Cycle length of the return map through (0,0) on P_0 (section methods).
  std::size_t section_cycle_length = 0;
  /// Sum of lane return times (return_counting).
  long long return_time_sum = 0;
};

struct Certificate {
  /// "direct_iteration", "return_counting", "return_map_cycle", or "none".
  std::string method = "none";
  std::vector<ColorCertificate> per_color;
};

struct HamiltonDecomposition {
  int m = 0;
  CaseTag case_tag = CaseTag::odd;
  DirectionAssignment assignment{3, kCanonicalTriple};
  /// The three orbits of (0,0,0), as dense indices.
  std::optional<std::array<std::vector<Index>, 3>> cycles;
  Certificate certificate;
};

struct DecomposeOptions {
  /// Largest m certified by direct iteration.
  int direct_threshold = 20;
  bool include_cycles = true;
};

/// The coloring for m together with its certificate. Throws ModulusError for
/// m < 3 and TorusError if the certificate does not hold.
HamiltonDecomposition decompose(int m, const DecomposeOptions& options = {});

/// Orbit of (0,0,0) under color c, stopping after |V| + 1 steps.
std::vector<Index> orbit_from_origin(const DirectionAssignment& assign, Color c);

struct VerificationReport {
  bool triples_valid = true;
  std::optional<Index> bad_triple;
  std::array<std::optional<Collision>, 3> collisions;
  std::array<std::size_t, 3> orbit_lengths{};
  bool arc_disjoint = true;
  std::size_t arcs_covered = 0;
  std::size_t arcs_expected = 0;
  bool cycles_consistent = true;
  std::optional<int> sign_product;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Re-checks a decomposition from scratch by full iteration.
VerificationReport verify_decomposition(const HamiltonDecomposition& dec);

}  // namespace torus
