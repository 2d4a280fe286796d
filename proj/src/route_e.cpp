#include "torus/route_e.hpp"

#include <algorithm>

namespace torus {

namespace {

constexpr std::uint8_t kUnowned = 0xff;

const DirectionTriple kDefaultTriple{1, 2, 0};

int centered(long long d, int m) {
  const int r = mod(d, m);
  return 2 * r > m ? r - m : r;
}

// Records v as belonging to the set with triple t; overlap is a bug.
void claim(std::vector<std::uint8_t>& owner, std::vector<Vertex>& family, const Vertex& v,
           DirectionTriple t) {
  if (layer(v) != 0) {
    throw PartitionViolation("layer-0 family point (" + std::to_string(v.i) + "," +
                             std::to_string(v.j) + "," + std::to_string(v.k) + ") is off layer 0");
  }
  const Index idx = point_index(section_point(v), v.m);
  if (owner[idx] != kUnowned) {
    throw PartitionViolation("layer-0 point (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                             "," + std::to_string(v.k) + ") is listed twice");
  }
  owner[idx] = t.code();
  family.push_back(v);
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::actual:
      return "actual";
    case Variant::primary:
      return "primary";
    case Variant::deleted_repair:
      return "deleted-repair";
  }
  return "actual";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "actual") return Variant::actual;
  if (name == "primary") return Variant::primary;
  if (name == "deleted-repair" || name == "deleted_repair") return Variant::deleted_repair;
  return std::nullopt;
}

void require_route_e_modulus(int m) {
  require_modulus(m, 6);
  if (m % 2 != 0) throw ModulusError("Route E needs even m, got " + std::to_string(m));
}

EvenCase even_case(int m) {
  require_route_e_modulus(m);
  return m % 6 == 4 ? EvenCase::II : EvenCase::I;
}

DirectionTriple Layer0Families::triple_at(const Vertex& v) const {
  if (v.m != m) throw ModulusMismatch(v.m, m);
  if (layer(v) != 0) throw TorusError("layer-0 rule queried off layer 0");
  const std::uint8_t code = table_[point_index(section_point(v), m)];
  return code == kUnowned ? kDefaultTriple : DirectionTriple::from_code(code);
}

Layer0Families layer0_families(int m, Variant variant) {
  require_route_e_modulus(m);
  if (variant == Variant::deleted_repair && (m % 6 != 4 || m < 10)) {
    throw ModulusError("deleted-repair variant needs m = 4 (mod 6) and m >= 10");
  }
  Layer0Families f;
  f.m = m;
  f.variant = variant;
  f.case_tag = variant == Variant::primary ? EvenCase::I : even_case(m);
  const bool case2 = f.case_tag == EvenCase::II;
  const int lo = case2 ? 2 : 1;

  const DirectionTriple t102{1, 0, 2}, t021{0, 2, 1}, t210{2, 1, 0}, t012{0, 1, 2},
      t201{2, 0, 1};
  std::vector<std::uint8_t> owner(static_cast<std::size_t>(m) * m, kUnowned);
  auto at = [m](long long i, long long j, long long k) { return Vertex(i, j, k, m); };

  claim(owner, f.family_102, at(0, 0, 0), t102);
  for (int i = lo; i <= m - 3; ++i) claim(owner, f.family_102, at(i, 1, m - 1 - i), t102);
  claim(owner, f.family_102, at(m - 1, 2, m - 1), t102);

  claim(owner, f.family_021, at(0, 1, m - 1), t021);
  for (int i = lo; i <= m - 3; ++i) claim(owner, f.family_021, at(i, m - i, 0), t021);
  claim(owner, f.family_021, at(m - 1, 0, 1), t021);

  for (int j = 2; j <= m - 1; ++j) claim(owner, f.family_210, at(0, j, m - j), t210);
  claim(owner, f.family_210, at(1, 0, m - 1), t210);

  if (case2 && variant == Variant::actual) {
    std::vector<Vertex> repair;
    for (int j = 2; j <= m - 2; ++j) repair.push_back(at(1, j, m - 1 - j));
    repair.push_back(at(2, 0, m - 2));
    repair.push_back(at(2, m - 1, m - 1));
    for (const auto& v : repair) claim(owner, f.family_210, v, t210);
    f.repair_210 = std::move(repair);
  }

  if (case2) {
    claim(owner, f.exceptional_012, at(1, 1, m - 2), t012);
    claim(owner, f.exceptional_012, at(m - 2, 1, 1), t012);
    claim(owner, f.exceptional_201, at(1, m - 1, 0), t201);
    claim(owner, f.exceptional_201, at(m - 2, 2, 0), t201);
  } else {
    claim(owner, f.exceptional_012, at(m - 2, 1, 1), t012);
    claim(owner, f.exceptional_201, at(m - 2, 2, 0), t201);
  }
  f.table_ = std::move(owner);
  return f;
}

DirectionAssignment route_e_assignment(int m, Variant variant) {
  const Layer0Families families = layer0_families(m, variant);
  const DirectionTriple s1_axis{1, 0, 2}, s1_off{2, 0, 1}, s2_axis{2, 1, 0};
  return DirectionAssignment::tabulate(m, [&](const Vertex& v) {
    switch (layer(v)) {
      case 0:
        return families.triple_at(v);
      case 1:
        return v.i == 0 ? s1_axis : s1_off;
      case 2:
        return v.j == 0 ? s2_axis : kCanonicalTriple;
      default:
        return kCanonicalTriple;
    }
  });
}

DirectionAssignment primary_geometry_assignment(int m) {
  return route_e_assignment(m, Variant::primary);
}

DirectionAssignment deleted_repair_assignment(int m) {
  return route_e_assignment(m, Variant::deleted_repair);
}

int LowLayerWord::count(Direction r) const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), r));
}

std::string LowLayerWord::str() const {
  std::string s;
  for (Direction d : letters) s.push_back(static_cast<char>('0' + d));
  return s;
}

LowLayerWord transducer_word(const DirectionAssignment& assign, Color c, int i, int k) {
  const int m = assign.modulus();
  LowLayerWord w;
  Vertex v = section_vertex({i, k}, m);
  for (std::size_t s = 0; s < 3; ++s) {
    w.letters[s] = assign.triple_at(v)[c];
    v = bump(v, w.letters[s]);
  }
  return w;
}

Point2 return_from_word(Color c, const LowLayerWord& word, int i, int k, int m) {
  const int n0 = word.count(0);
  const int n2 = word.count(2);
  switch (c) {
    case 0:
      return {mod(i + n0 - 3, m), mod(k + n2, m)};
    case 1:
      return {mod(i + n0, m), mod(k + n2, m)};
    case 2:
      return {mod(i + n0, m), mod(k + n2 - 3, m)};
    default:
      throw TorusError("colors must be 0, 1 or 2");
  }
}

CrossCheckReport cross_check_R(int m) {
  require_route_e_modulus(m);
  CrossCheckReport report;
  report.m = m;
  const DirectionAssignment assign = route_e_assignment(m);
  for (Color c = 0; c < 3; ++c) {
    const SectionMap closed = closed_form_R(c, m);
    const SectionMap iterated = return_map_by_iteration(assign, c);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const Point2 p{i, k};
        const Point2 a = closed(p);
        const Point2 b = return_from_word(c, transducer_word(assign, c, i, k), i, k, m);
        const Point2 d = iterated(p);
        if (!(a == b) || !(a == d)) report.mismatches.push_back({c, p, a, b, d});
      }
    }
  }
  return report;
}

AffineSectionMap BulkFrame::forward(int m) const { return AffineSectionMap(m, linear); }
AffineSectionMap BulkFrame::inverse(int m) const { return AffineSectionMap(m, inverse_linear); }

BulkFrame bulk_frame(Color c) {
  BulkFrame f;
  f.color = c;
  switch (c) {
    case 0:
      f.linear << 1, 2, 0, 1;
      f.inverse_linear << 1, -2, 0, 1;
      f.bulk << -2, 1;
      break;
    case 1:
      f.linear << 1, -1, 0, 1;
      f.inverse_linear << 1, 1, 0, 1;
      f.bulk << 1, 1;
      break;
    case 2:
      f.linear << 2, 1, -1, -1;
      f.inverse_linear << 1, 1, -1, -2;
      f.bulk << 1, -2;
      break;
    default:
      throw TorusError("colors must be 0, 1 or 2");
  }
  if (f.linear * f.bulk != IntVector2(0, 1)) throw TorusError("bulk vector is not sent to (0,1)");
  if (f.linear * f.inverse_linear != IntMatrix2::Identity()) {
    throw TorusError("bulk frame inverse is wrong");
  }
  const long long det = f.linear(0, 0) * f.linear(1, 1) - f.linear(0, 1) * f.linear(1, 0);
  if (det != 1 && det != -1) throw TorusError("bulk frame determinant is not a unit");
  return f;
}

namespace {

struct AllowedStep {
  int du;
  int dt;
};

const std::vector<AllowedStep>& allowed_steps(Color c) {
  static const std::vector<AllowedStep> color0{{-2, 0}, {3, 3}, {2, 2}, {-1, 0}, {1, 2}, {1, 1}};
  static const std::vector<AllowedStep> color1{{1, 0}, {2, 0}};
  static const std::vector<AllowedStep> color2{{-1, 2}, {1, 1}, {-1, 1}, {-2, 2}, {1, 0}};
  return c == 0 ? color0 : (c == 1 ? color1 : color2);
}

std::string supporting_line(Color c, int m, Point2 p) {
  const int u = p.a;
  const int t = p.b;
  const bool case2 = even_case(m) == EvenCase::II;
  switch (c) {
    case 1:
      if (mod(u + t, m) == 0) return "u+t=0";
      if (mod(u + 2 * t, m) == m - 1) return "u+2t=m-1";
      if (case2 && mod(u + t, m) == 1) return "u+t=1";
      break;
    case 2:
      if (t == 1) return "t=1";
      if (t == m - 1) return "t=m-1";
      if (mod(u + 2 * t, m) == 0) return "u+2t=0";
      if (mod(u + t, m) == m - 1) return "u+t=m-1";
      break;
    default:
      if (t == 0) return "t=0";
      if (u == mod(t + 1, m)) return "u=t+1";
      if (case2 && u == mod(1 + 2 * t, m)) return "u=1+2t";
      break;
  }
  return "isolated";
}

}  // namespace

DefectBranch defect_classify(Color c, int m, Point2 point) {
  require_route_e_modulus(m);
  const BulkFrame frame = bulk_frame(c);
  const Point2 ik = frame.inverse(m)(point);
  const Point2 image = frame.forward(m)(closed_form_R_at(c, m, ik).image);
  DefectBranch b;
  b.point = point;
  b.delta_u = centered(image.a - point.a, m);
  b.delta_t = centered(image.b - point.b, m);
  if (b.delta_u == 0 && b.delta_t == 1) {
    b.support = "generic";
    return b;
  }
  const auto& allowed = allowed_steps(c);
  const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const AllowedStep& s) {
    return s.du == b.delta_u && s.dt == b.delta_t;
  });
  if (!known) {
    throw UnclassifiedDefect("color " + std::to_string(c) + ", m=" + std::to_string(m) +
                             ": step (" + std::to_string(b.delta_u) + "," +
                             std::to_string(b.delta_t) + ") at (" + std::to_string(point.a) +
                             "," + std::to_string(point.b) + ") is not an allowed defect");
  }
  b.support = supporting_line(c, m, point);
  return b;
}

std::vector<DefectBranch> defect_set(Color c, int m) {
  std::vector<DefectBranch> out;
  for (int u = 0; u < m; ++u) {
    for (int t = 0; t < m; ++t) {
      DefectBranch b = defect_classify(c, m, {u, t});
      if (!b.generic()) out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace torus
