#include "torus/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "torus/decomposer.hpp"
#include "torus/kempe.hpp"
#include "torus/odd_witness.hpp"
#include "torus/route_e.hpp"
#include "torus/serialize.hpp"
#include "torus/witness_m4.hpp"

namespace torus::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string signed_text(int s) { return s > 0 ? "+1" : "-1"; }

std::string cycle_text(const std::vector<Index>& cycle) {
  std::string s = "(";
  for (std::size_t n = 0; n < cycle.size(); ++n) {
    if (n) s.push_back(' ');
    s += std::to_string(cycle[n]);
  }
  return s + ")";
}

int cmd_decompose(int m, const std::string& format, const std::string& out_path, bool no_cycles,
                  int threshold, std::ostream& out, std::ostream& err) {
  const auto f = parse_format(format);
  if (!f) throw UsageError("unsupported format '" + format + "'");
  DecomposeOptions options;
  options.direct_threshold = threshold;
  options.include_cycles = !no_cycles;
  const HamiltonDecomposition dec = decompose(m, options);
  const std::string text = export_decomposition(dec, *f);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text;
    err << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& in_path, std::ostream& out, std::ostream& err) {
  std::ifstream file(in_path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + in_path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  HamiltonDecomposition dec;
  try {
    dec = import_decomposition(buffer.str());
  } catch (const TorusError& e) {
    err << "error: " << e.what() << "\n";
    out << "verdict: FAIL\n";
    return kExitVerificationFailed;
  }
  const VerificationReport r = verify_decomposition(dec);
  out << "m=" << dec.m << " case=" << case_tag_name(dec.case_tag) << "\n";
  for (Color c = 0; c < 3; ++c) {
    out << "color " << c << ": orbit length " << r.orbit_lengths[static_cast<std::size_t>(c)]
        << (r.collisions[static_cast<std::size_t>(c)] ? ", not a bijection" : ", bijective") << "\n";
  }
  out << "arcs covered: " << r.arcs_covered << " of " << r.arcs_expected
      << (r.arc_disjoint ? ", arc-disjoint" : ", overlapping") << "\n";
  if (r.sign_product) out << "sign product: " << signed_text(*r.sign_product) << "\n";
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
  out << "verdict: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

DirectionAssignment coloring_by_name(const std::string& name, int m) {
  if (name == "canonical") return canonical_assignment(m);
  if (name == "odd") return odd_closed_form(m);
  if (name == "route-e") return route_e_assignment(m);
  if (name == "m4") {
    if (m != 4) throw UsageError("the m4 coloring needs --m 4");
    return m4_assignment();
  }
  throw UsageError("unknown coloring '" + name + "'");
}

int cmd_sign(int m, const std::string& coloring, std::ostream& out) {
  const DirectionAssignment a = coloring_by_name(coloring, m);
  out << "m=" << m << " coloring=" << coloring << "\n";
  const ColoringReport valid = is_valid_coloring(a);
  if (!valid.valid) {
    out << "not a valid coloring\n";
    return kExitVerificationFailed;
  }
  int product = 1;
  for (Color c = 0; c < 3; ++c) {
    const int s = permutation_sign(color_map(a, c));
    product *= s;
    out << "sign[" << c << "]=" << signed_text(s) << "\n";
  }
  out << "product=" << signed_text(product) << "\n";
  if (coloring == "canonical" && m % 2 == 0) {
    const ParityBarrierReport p = parity_barrier_report(m);
    out << "parity barrier: canonical=" << signed_text(p.canonical_product)
        << " hamilton=" << signed_text(p.hamilton_product) << " verdict=" << p.verdict << "\n";
  }
  return kExitOk;
}

int cmd_return_map(int m, Color c, const std::string& construction, std::ostream& out) {
  SectionMap map = SectionMap::identity(m);
  out << "m=" << m << " color=" << c << " construction=" << construction << "\n";
  if (construction == "odd") {
    map = return_map_F(c, m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const Point2 img = map({i, k});
        out << i << "," << k << " -> " << img.a << "," << img.b << "\n";
      }
    }
  } else if (construction == "route-e") {
    require_route_e_modulus(m);
    map = closed_form_R(c, m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const BranchImage b = closed_form_R_at(c, m, {i, k});
        out << i << "," << k << " -> " << b.image.a << "," << b.image.b << " branch " << b.branch
            << "\n";
      }
    }
  } else {
    throw UsageError("unknown construction '" + construction + "'");
  }
  if (find_collision(map.table())) {
    out << "cycles: not a permutation\n";
  } else {
    const auto lengths = cycle_lengths(map.table());
    out << "cycles: " << lengths.size() << "\n";
  }
  return kExitOk;
}

int cmd_first_return(int m, Color c, const std::string& variant_text, std::ostream& out) {
  const auto variant = parse_variant(variant_text);
  if (!variant) throw UsageError("unknown variant '" + variant_text + "'");
  const LaneReturnData data = first_return(c, m, *variant);
  out << "m=" << m << " color=" << c << " variant=" << variant_name(*variant) << "\n";
  out << "transversal: " << data.transversal << "\n";
  out << "x T rho\n";
  for (const Lane& l : data.lanes) {
    out << l.x << " " << (l.target ? std::to_string(*l.target) : std::string("-")) << " "
        << (l.target ? std::to_string(l.time) : std::string("-")) << "\n";
  }
  out << "sum_rho=" << data.total_time() << " (m^2=" << m * m << ")\n";

  bool single = false;
  if (!data.complete()) {
    out << "lane map: some lanes do not return\n";
  } else {
    const auto t = data.targets();
    if (auto hit = find_collision(t)) {
      out << "lane map: not injective, T(" << hit->first << ")=T(" << hit->second
          << ")=" << hit->image << "\n";
    } else {
      const auto dec = cycle_decomposition(t);
      out << "lane cycles:";
      for (const auto& cycle : dec.cycles) out << " " << cycle_text(cycle);
      out << "\n";
      single = dec.is_single_cycle();
    }
  }
  if (*variant == Variant::actual) {
    const SpliceResult s = splice_blocks(c, m, data.targets());
    out << "blocks:";
    for (const auto& b : s.blocks) {
      out << " (";
      for (std::size_t n = 0; n < b.size(); ++n) out << (n ? " " : "") << b[n];
      out << ")";
    }
    out << "\nsplice:";
    for (std::size_t j = 0; j < s.splice.size(); ++j) out << " " << j + 1 << "->" << s.splice[j] + 1;
    out << "\n";
  }
  const bool certified = single && data.total_time() == static_cast<long long>(m) * m;
  out << "verdict: " << (certified ? "single m-cycle" : "not single cycle") << "\n";
  if (*variant == Variant::actual && !certified) return kExitVerificationFailed;
  return kExitOk;
}

int cmd_defects(int m, Color c, const std::string& emit, std::ostream& out) {
  if (emit != "csv") throw UsageError("only --emit csv is supported");
  out << "u,t,branch,delta_u,delta_t\n";
  for (const DefectBranch& d : defect_set(c, m)) {
    out << d.point.a << "," << d.point.b << "," << d.support << "," << d.delta_u << ","
        << d.delta_t << "\n";
  }
  return kExitOk;
}

int cmd_cross_check(int lo, int hi, std::ostream& out) {
  if (lo > hi) throw UsageError("--m-min exceeds --m-max");
  bool all_ok = true;
  for (int m = std::max(lo, 6); m <= hi; ++m) {
    if (m % 2 != 0) continue;
    const CrossCheckReport r = cross_check_R(m);
    bool lanes_ok = true;
    bool splice_ok = true;
    for (Color c = 0; c < 3; ++c) {
      try {
        const LaneReturnData data = first_return(c, m);
        lanes_ok = lanes_ok && counting_check(data);
        splice_ok = splice_ok && splice_blocks(c, m, data.targets()).single_cycle;
      } catch (const TorusError& e) {
        out << "m=" << m << " color " << c << ": " << e.what() << "\n";
        lanes_ok = false;
        splice_ok = false;
      }
    }
    for (const auto& mm : r.mismatches) {
      out << "m=" << m << " color " << mm.color << " at " << mm.point.a << "," << mm.point.b
          << ": closed " << mm.closed_form.a << "," << mm.closed_form.b << " word "
          << mm.transducer.a << "," << mm.transducer.b << " iteration " << mm.iteration.a << ","
          << mm.iteration.b << "\n";
    }
    out << "m=" << m << " return-maps:" << (r.ok() ? "ok" : "MISMATCH")
        << " first-return:" << (lanes_ok ? "ok" : "FAIL") << " splice:" << (splice_ok ? "ok" : "FAIL")
        << "\n";
    all_ok = all_ok && r.ok() && lanes_ok && splice_ok;
  }
  out << "verdict: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton decompositions of the directed 3-torus D3(m)", "torus3"};
  app.require_subcommand(1);

  int m = 0;
  Color color = 0;
  std::string format = "json";
  std::string out_path;
  std::string in_path;
  bool no_cycles = false;
  int threshold = DecomposeOptions{}.direct_threshold;
  std::string coloring = "canonical";
  std::string construction = "route-e";
  std::string variant = "actual";
  std::string emit;
  int m_min = 6;
  int m_max = 20;

  auto* decompose_cmd = app.add_subcommand("decompose", "Build and certify a decomposition");
  decompose_cmd->add_option("--m", m, "Modulus (>= 3)")->required();
  decompose_cmd->add_option("--format", format, "json | cycles | arcs");
  decompose_cmd->add_option("--out", out_path, "Write to this file instead of stdout");
  decompose_cmd->add_flag("--no-cycles", no_cycles, "Omit the explicit cycles");
  decompose_cmd->add_option("--threshold", threshold, "Largest m certified by direct iteration");

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify an exported decomposition");
  verify_cmd->add_option("--in", in_path, "Exported file")->required();

  auto* sign_cmd = app.add_subcommand("sign", "Per-color signs and their product");
  sign_cmd->add_option("--m", m, "Modulus")->required();
  sign_cmd->add_option("--coloring", coloring, "canonical | odd | route-e | m4");

  auto* return_cmd = app.add_subcommand("return-map", "Return map on P_0");
  return_cmd->add_option("--m", m, "Modulus")->required();
  return_cmd->add_option("--color", color, "Color")->required()->check(CLI::Range(0, 2));
  return_cmd->add_option("--construction", construction, "odd | route-e");

  auto* first_cmd = app.add_subcommand("first-return", "Lane map, return times, splice");
  first_cmd->add_option("--m", m, "Even modulus >= 6")->required();
  first_cmd->add_option("--color", color, "Color")->required()->check(CLI::Range(0, 2));
  first_cmd->add_option("--variant", variant, "actual | primary | deleted-repair");

  auto* defects_cmd = app.add_subcommand("defects", "Bulk-frame defect geometry");
  defects_cmd->add_option("--m", m, "Even modulus >= 6")->required();
  defects_cmd->add_option("--color", color, "Color")->required()->check(CLI::Range(0, 2));
  defects_cmd->add_option("--emit", emit, "csv")->required();

  auto* cross_cmd = app.add_subcommand("cross-check", "Return-map and first-return agreement");
  cross_cmd->add_option("--m-min", m_min, "Smallest m");
  cross_cmd->add_option("--m-max", m_max, "Largest m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(m, format, out_path, no_cycles, threshold, out, err);
    if (verify_cmd->parsed()) return cmd_verify(in_path, out, err);
    if (sign_cmd->parsed()) return cmd_sign(m, coloring, out);
    if (return_cmd->parsed()) return cmd_return_map(m, color, construction, out);
    if (first_cmd->parsed()) return cmd_first_return(m, color, variant, out);
    if (defects_cmd->parsed()) return cmd_defects(m, color, emit, out);
    if (cross_cmd->parsed()) return cmd_cross_check(m_min, m_max, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModulusError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TorusError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"torus3"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace torus::cli
