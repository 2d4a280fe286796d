#include "torus/decomposer.hpp"

#include "torus/kempe.hpp"
#include "torus/odd_witness.hpp"
#include "torus/route_e.hpp"
#include "torus/witness_m4.hpp"

namespace torus {

std::string_view case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::odd:
      return "odd";
    case CaseTag::m4:
      return "m4";
    case CaseTag::even_case_I:
      return "even_case_I";
    case CaseTag::even_case_II:
      return "even_case_II";
  }
  return "odd";
}

std::optional<CaseTag> parse_case_tag(std::string_view name) {
  for (CaseTag t : {CaseTag::odd, CaseTag::m4, CaseTag::even_case_I, CaseTag::even_case_II}) {
    if (case_tag_name(t) == name) return t;
  }
  return std::nullopt;
}

CaseTag case_for_modulus(int m) {
  require_modulus(m, 3);
  if (m % 2 == 1) return CaseTag::odd;
  if (m == 4) return CaseTag::m4;
  return even_case(m) == EvenCase::I ? CaseTag::even_case_I : CaseTag::even_case_II;
}

std::vector<Index> orbit_from_origin(const DirectionAssignment& assign, Color c) {
  std::vector<Index> orbit;
  Index v = 0;
  do {
    orbit.push_back(v);
    v = assign.step(c, v);
  } while (v != 0 && orbit.size() <= assign.size());
  return orbit;
}

namespace {

DirectionAssignment build(CaseTag tag, int m) {
  switch (tag) {
    case CaseTag::odd:
      return odd_closed_form(m);
    case CaseTag::m4:
      return m4_assignment();
    default:
      return route_e_assignment(m);
  }
}

std::size_t section_cycle_through_origin(const SectionMap& f) {
  return orbit_length(f.table(), 0);
}

}  // namespace

HamiltonDecomposition decompose(int m, const DecomposeOptions& options) {
  HamiltonDecomposition dec;
  dec.m = m;
  dec.case_tag = case_for_modulus(m);
  dec.assignment = build(dec.case_tag, m);
  const DirectionAssignment& a = dec.assignment;
  const std::size_t n = a.size();
  const std::size_t n2 = static_cast<std::size_t>(m) * m;

  std::array<std::vector<Index>, 3> orbits;
  const bool direct = m <= options.direct_threshold;
  if (direct || options.include_cycles) {
    for (Color c = 0; c < 3; ++c) orbits[static_cast<std::size_t>(c)] = orbit_from_origin(a, c);
  }

  if (direct) {
    dec.certificate.method = "direct_iteration";
    const bool valid = is_valid_coloring(a).valid;
    for (Color c = 0; c < 3; ++c) {
      ColorCertificate cc;
      cc.color = c;
      cc.orbit_length = orbits[static_cast<std::size_t>(c)].size();
      cc.passed = valid && cc.orbit_length == n;
      dec.certificate.per_color.push_back(cc);
    }
  } else if (dec.case_tag == CaseTag::even_case_I || dec.case_tag == CaseTag::even_case_II) {
    dec.certificate.method = "return_counting";
    const bool valid = validity_via_return(a);
    for (Color c = 0; c < 3; ++c) {
      const LaneReturnData lanes = first_return(c, m);
      ColorCertificate cc;
      cc.color = c;
      cc.return_time_sum = lanes.total_time();
      cc.section_cycle_length = section_cycle_through_origin(return_map_by_layers(a, c));
      cc.passed = valid && counting_check(lanes) && cc.section_cycle_length == n2;
      dec.certificate.per_color.push_back(cc);
    }
  } else {
    dec.certificate.method = "return_map_cycle";
    const bool valid = validity_via_return(a);
    for (Color c = 0; c < 3; ++c) {
      const SectionMap f = return_map_by_layers(a, c);
      ColorCertificate cc;
      cc.color = c;
      cc.section_cycle_length = section_cycle_through_origin(f);
      cc.passed = valid && cc.section_cycle_length == n2;
      dec.certificate.per_color.push_back(cc);
    }
  }

  for (const auto& cc : dec.certificate.per_color) {
    if (!cc.passed) {
      throw TorusError("certificate (" + dec.certificate.method + ") fails for color " +
                       std::to_string(cc.color) + " at m=" + std::to_string(m));
    }
  }
  if (options.include_cycles) dec.cycles = std::move(orbits);
  return dec;
}

VerificationReport verify_decomposition(const HamiltonDecomposition& dec) {
  VerificationReport r;
  const DirectionAssignment& a = dec.assignment;
  const int m = a.modulus();
  const std::size_t n = a.size();
  if (m != dec.m) r.failures.push_back("modulus field disagrees with the assignment");

  for (Index v = 0; v < n; ++v) {
    const DirectionTriple t = a.triple_at(v);
    if (!DirectionTriple::is_permutation(t[0], t[1], t[2])) {
      r.triples_valid = false;
      r.bad_triple = v;
      r.failures.push_back("triple at index " + std::to_string(v) + " is not a permutation");
      break;
    }
  }

  bool bijective = true;
  for (Color c = 0; c < 3; ++c) {
    const auto map = color_map(a, c);
    auto& hit = r.collisions[static_cast<std::size_t>(c)];
    hit = find_collision(map);
    if (hit) {
      bijective = false;
      r.failures.push_back("color " + std::to_string(c) + " is not a bijection: indices " +
                           std::to_string(hit->first) + " and " + std::to_string(hit->second) +
                           " both map to " + std::to_string(hit->image));
    }
    const auto orbit = orbit_from_origin(a, c);
    r.orbit_lengths[static_cast<std::size_t>(c)] = orbit.size();
    if (orbit.size() != n) {
      r.failures.push_back("color " + std::to_string(c) + " orbit of (0,0,0) has length " +
                           std::to_string(orbit.size()) + ", expected " + std::to_string(n));
    }
    if (dec.cycles && (*dec.cycles)[static_cast<std::size_t>(c)] != orbit) {
      r.cycles_consistent = false;
      r.failures.push_back("stored cycle for color " + std::to_string(c) +
                           " differs from the recomputed orbit");
    }
  }

  // Each arc (v, d) may carry at most one color.
  std::vector<std::uint8_t> used(3 * n, 0);
  r.arcs_expected = 3 * n;
  for (Index v = 0; v < n; ++v) {
    for (Color c = 0; c < 3; ++c) {
      auto& slot = used[3 * static_cast<std::size_t>(v) + static_cast<std::size_t>(a.direction(c, v))];
      if (slot) r.arc_disjoint = false;
      slot = 1;
    }
  }
  for (std::uint8_t s : used) r.arcs_covered += s;
  if (!r.arc_disjoint) r.failures.push_back("two colors share an arc");
  if (r.arcs_covered != r.arcs_expected) {
    r.failures.push_back("arcs covered: " + std::to_string(r.arcs_covered) + " of " +
                         std::to_string(r.arcs_expected));
  }

  if (bijective) {
    r.sign_product = sign_product(a);
    if (m % 2 == 0 && *r.sign_product != -1) {
      r.failures.push_back("sign product is +1; a Hamilton decomposition at even m needs -1");
    }
  }
  return r;
}

}  // namespace torus
