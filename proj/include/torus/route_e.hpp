#pragma once

// Route E: the even-m (m >= 6) low-layer direction assignment, its return
// maps R_c on P_0, bulk frames, defect geometry, and first-return lane maps.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torus/core.hpp"
#include "torus/section_map.hpp"

namespace torus {

/// Which layer-0 rule to build. `primary` uses the m = 0,2 (mod 6) families
/// for every even m; `deleted_repair` is the m = 4 (mod 6) rule with the
/// repair track reverted to the default triple.
enum class Variant { actual, primary, deleted_repair };

/// Case I: m = 0,2 (mod 6). Case II: m = 4 (mod 6).
enum class EvenCase { I, II };

std::string_view variant_name(Variant v);
/// Accepts "actual", "primary", "deleted-repair" / "deleted_repair".
std::optional<Variant> parse_variant(std::string_view name);

/// Throws ModulusError unless m is even and m >= 6.
void require_route_e_modulus(int m);
EvenCase even_case(int m);

struct Layer0Families {
  int m = 0;
  EvenCase case_tag = EvenCase::I;
  Variant variant = Variant::actual;
  std::vector<Vertex> family_102;
  std::vector<Vertex> family_021;
  std::vector<Vertex> family_210;
  /// The repair track, a subset of family_210 (Case II only, actual variant).
  std::vector<Vertex> repair_210;
  std::vector<Vertex> exceptional_012;
  std::vector<Vertex> exceptional_201;

  /// Triple on layer 0; the default (1,2,0) off the listed sets.
  [[nodiscard]] DirectionTriple triple_at(const Vertex& v) const;

 private:
  friend Layer0Families layer0_families(int m, Variant variant);
  std::vector<std::uint8_t> table_;
};

/// Builds and partition-checks the layer-0 families. Throws
/// PartitionViolation if any two listed sets meet.
Layer0Families layer0_families(int m, Variant variant = Variant::actual);

DirectionAssignment route_e_assignment(int m, Variant variant = Variant::actual);
DirectionAssignment primary_geometry_assignment(int m);
/// Requires m = 4 (mod 6) and m >= 10.
DirectionAssignment deleted_repair_assignment(int m);

// ---------------------------------------------------------------------------
// Three-step transducer

/// Directions taken by color c on layers 0, 1, 2 from v(i,k) = (i,-i-k,k).
struct LowLayerWord {
  std::array<Direction, 3> letters{};
  [[nodiscard]] int count(Direction r) const;
  [[nodiscard]] std::string str() const;
};

LowLayerWord transducer_word(const DirectionAssignment& assign, Color c, int i, int k);

/// R_0 = (i+N_0-3, k+N_2), R_1 = (i+N_0, k+N_2), R_2 = (i+N_0, k+N_2-3).
Point2 return_from_word(Color c, const LowLayerWord& word, int i, int k, int m);

// ---------------------------------------------------------------------------
// Closed-form return maps

struct BranchImage {
  Point2 image;
  /// 1-based index of the branch taken, in display order.
  int branch = 0;
};

/// R_c(i,k) with earlier branches taking precedence.
BranchImage closed_form_R_at(Color c, int m, Point2 ik);
SectionMap closed_form_R(Color c, int m);

struct RMismatch {
  Color color = 0;
  Point2 point;
  Point2 closed_form;
  Point2 transducer;
  Point2 iteration;
};

struct CrossCheckReport {
  int m = 0;
  std::vector<RMismatch> mismatches;
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Closed form vs transducer vs m-step iteration at every point and color.
CrossCheckReport cross_check_R(int m);

// ---------------------------------------------------------------------------
// Bulk frames and defects

struct BulkFrame {
  Color color = 0;
  IntMatrix2 linear;
  IntMatrix2 inverse_linear;
  IntVector2 bulk;

  [[nodiscard]] AffineSectionMap forward(int m) const;
  [[nodiscard]] AffineSectionMap inverse(int m) const;
};

/// Phi_0(i,k) = (i+2k, k), Phi_1(i,k) = (i-k, k), Phi_2(i,k) = (2i+k, -i-k).
BulkFrame bulk_frame(Color c);

struct DefectBranch {
  Point2 point;
  /// Lane and clock increments, each in (-m/2, m/2].
  int delta_u = 0;
  int delta_t = 1;
  /// "generic", a supporting line such as "u+t=0", or "isolated".
  std::string support;
  [[nodiscard]] bool generic() const { return support == "generic"; }
};

/// Classifies the step of Phi_c R_c Phi_c^{-1} at `point` (bulk frame).
/// Throws UnclassifiedDefect for an increment outside the allowed list.
DefectBranch defect_classify(Color c, int m, Point2 point);

/// All non-generic points, in index order.
std::vector<DefectBranch> defect_set(Color c, int m);

// ---------------------------------------------------------------------------
// First return to the transversal

struct LaneStep {
  Point2 from;
  int delta_x = 0;
  int delta_y = 0;
};

struct Lane {
  int x = 0;
  std::optional<int> target;
  std::size_t time = 0;
  /// Non-generic steps met before first return, in order.
  std::vector<LaneStep> itinerary;
};

struct LaneReturnData {
  int m = 0;
  Color color = 0;
  Variant variant = Variant::actual;
  /// "bulk (u,t), t = 0" or "(x,y) = (i, i+k), y = 0".
  std::string transversal;
  std::vector<Lane> lanes;

  [[nodiscard]] bool complete() const;
  /// T_c as a table; throws NoReturn on the first lane without a target.
  [[nodiscard]] std::vector<Index> targets() const;
  [[nodiscard]] long long total_time() const;
};

/// Working frame for first returns: bulk frame for colors 0 and 1,
/// (x,y) = (i, i+k) for color 2.
AffineSectionMap working_frame(Color c, int m);

/// Iterates the return map of the chosen variant from each lane. Lanes that
/// do not return within m^2 steps are left without a target; for the actual
/// variant that throws NoReturn, and the result is checked against
/// first_return_closed_form.
LaneReturnData first_return(Color c, int m, Variant variant = Variant::actual);

/// The tabulated T_c and rho_c.
LaneReturnData first_return_closed_form(Color c, int m);

struct SpliceResult {
  std::vector<std::vector<int>> blocks;
  /// pi[j] = block entered after the terminal point of block j (0-based).
  std::vector<int> splice;
  bool single_cycle = false;
};

/// Ordered family-blocks and the splice permutation. Throws BlockMismatch if
/// T_c does not follow the block successor structure.
SpliceResult splice_blocks(Color c, int m);
/// Same, against an explicit lane map.
SpliceResult splice_blocks(Color c, int m, std::span<const Index> lane_map);

/// T_c is a single m-cycle and the return times sum to m^2.
bool counting_check(const LaneReturnData& lanes);

}  // namespace torus
