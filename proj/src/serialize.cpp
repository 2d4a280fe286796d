#include "torus/serialize.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

namespace torus {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr std::array<int, 3> kUnsetTriple{-1, -1, -1};

std::string vertex_text(Index idx, int m) {
  const Vertex v = Vertex::from_index(idx, m);
  return std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k);
}

Vertex parse_vertex(std::string_view token, int m) {
  std::array<long long, 3> c{};
  std::size_t pos = 0;
  for (std::size_t n = 0; n < 3; ++n) {
    const std::size_t end = n < 2 ? token.find(',', pos) : token.size();
    if (end == std::string_view::npos) throw ParseError("bad vertex '" + std::string(token) + "'");
    const std::string part(token.substr(pos, end - pos));
    try {
      std::size_t used = 0;
      c[n] = std::stoll(part, &used);
      if (used != part.size()) throw ParseError("bad vertex '" + std::string(token) + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad vertex '" + std::string(token) + "'");
    }
    if (c[n] < 0 || c[n] >= m) throw ParseError("coordinate out of range in '" + std::string(token) + "'");
    pos = end + 1;
  }
  return Vertex(c[0], c[1], c[2], m);
}

int cube_root(std::size_t n) {
  const int r = static_cast<int>(std::lround(std::cbrt(static_cast<double>(n))));
  for (int m = std::max(1, r - 1); m <= r + 1; ++m) {
    if (static_cast<std::size_t>(m) * m * m == n) return m;
  }
  throw ParseError(std::to_string(n) + " vertices is not a cube");
}

std::vector<std::string> nonempty_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

HamiltonDecomposition finish(int m, std::span<const std::array<int, 3>> raw) {
  for (Index v = 0; v < raw.size(); ++v) {
    if (raw[v] == kUnsetTriple || raw[v][0] < 0 || raw[v][1] < 0 || raw[v][2] < 0) {
      throw IllFormedTriple(v, "no direction recorded for some color");
    }
  }
  HamiltonDecomposition dec;
  dec.m = m;
  dec.case_tag = case_for_modulus(m);
  dec.assignment = DirectionAssignment::from_raw(m, raw);
  return dec;
}

json certificate_json(const Certificate& cert) {
  json per_color = json::array();
  for (const auto& cc : cert.per_color) {
    per_color.push_back({{"color", cc.color},
                         {"passed", cc.passed},
                         {"orbit_length", cc.orbit_length},
                         {"section_cycle_length", cc.section_cycle_length},
                         {"return_time_sum", cc.return_time_sum}});
  }
  return {{"method", cert.method}, {"per_color", per_color}};
}

HamiltonDecomposition import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported schema_version");
    }
    const int m = doc.at("m").get<int>();
    require_modulus(m, 3);
    const auto& triples = doc.at("triples");
    if (triples.size() != static_cast<std::size_t>(m) * m * m) {
      throw ParseError("expected " + std::to_string(m * m * m) + " triples");
    }
    std::vector<std::array<int, 3>> raw;
    raw.reserve(triples.size());
    for (const auto& t : triples) {
      const std::string word = t.get<std::string>();
      if (word.size() != 3) throw ParseError("triple '" + word + "' must have three digits");
      raw.push_back({word[0] - '0', word[1] - '0', word[2] - '0'});
    }
    HamiltonDecomposition dec = finish(m, raw);
    const auto tag = parse_case_tag(doc.at("case").get<std::string>());
    if (!tag) throw ParseError("unknown case '" + doc.at("case").get<std::string>() + "'");
    dec.case_tag = *tag;
    if (doc.contains("cycles")) {
      std::array<std::vector<Index>, 3> cycles;
      const auto& jc = doc.at("cycles");
      if (jc.size() != 3) throw ParseError("cycles must hold three colors");
      for (std::size_t c = 0; c < 3; ++c) {
        for (const auto& p : jc[c]) {
          cycles[c].push_back(Vertex(p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>(), m).index());
        }
      }
      dec.cycles = std::move(cycles);
    }
    if (doc.contains("certificate")) {
      const auto& jc = doc.at("certificate");
      dec.certificate.method = jc.at("method").get<std::string>();
      for (const auto& e : jc.at("per_color")) {
        ColorCertificate cc;
        cc.color = e.at("color").get<int>();
        cc.passed = e.at("passed").get<bool>();
        cc.orbit_length = e.at("orbit_length").get<std::size_t>();
        cc.section_cycle_length = e.at("section_cycle_length").get<std::size_t>();
        cc.return_time_sum = e.at("return_time_sum").get<long long>();
        dec.certificate.per_color.push_back(cc);
      }
    }
    return dec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed decomposition document: ") + e.what());
  }
}

HamiltonDecomposition import_arcs(const std::vector<std::string>& lines) {
  if (lines.size() % 3 != 0) throw ParseError("arc count is not a multiple of 3");
  const int m = cube_root(lines.size() / 3);
  require_modulus(m, 3);
  std::vector<std::array<int, 3>> raw(lines.size() / 3, kUnsetTriple);
  for (const auto& line : lines) {
    const auto t = tokens(line);
    if (t.size() != 3 || t[1].size() != 1 || t[2].size() != 1) {
      throw ParseError("arc line must read 'i,j,k d c': '" + line + "'");
    }
    const int d = t[1][0] - '0';
    const int c = t[2][0] - '0';
    if (d < 0 || d > 2 || c < 0 || c > 2) throw ParseError("bad direction or color in '" + line + "'");
    auto& slot = raw[parse_vertex(t[0], m).index()][static_cast<std::size_t>(c)];
    if (slot != -1) throw ParseError("color listed twice at a vertex: '" + line + "'");
    slot = d;
  }
  return finish(m, raw);
}

HamiltonDecomposition import_cycles(const std::vector<std::string>& lines) {
  if (lines.size() != 3) throw ParseError("cycle text needs exactly three lines");
  std::array<std::vector<std::string>, 3> parts;
  for (std::size_t c = 0; c < 3; ++c) parts[c] = tokens(lines[c]);
  const int m = cube_root(parts[0].size());
  require_modulus(m, 3);
  std::vector<std::array<int, 3>> raw(parts[0].size(), kUnsetTriple);
  std::array<std::vector<Index>, 3> cycles;
  for (std::size_t c = 0; c < 3; ++c) {
    if (parts[c].size() != raw.size()) throw ParseError("every color must list every vertex");
    for (const auto& tok : parts[c]) cycles[c].push_back(parse_vertex(tok, m).index());
    for (std::size_t n = 0; n < cycles[c].size(); ++n) {
      const Index from = cycles[c][n];
      const Index to = cycles[c][(n + 1) % cycles[c].size()];
      int dir = -1;
      for (int d = 0; d < 3; ++d) {
        if (bump_index(from, d, m) == to) dir = d;
      }
      if (dir < 0) throw ParseError("consecutive vertices are not joined by an arc");
      if (raw[from][c] != -1) throw ParseError("vertex visited twice by one color");
      raw[from][c] = dir;
    }
  }
  HamiltonDecomposition dec = finish(m, raw);
  dec.cycles = std::move(cycles);
  return dec;
}

}  // namespace

std::optional<ExportFormat> parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::json;
  if (name == "cycles" || name == "cycles_text") return ExportFormat::cycles_text;
  if (name == "arcs" || name == "arcs_edgelist") return ExportFormat::arcs_edgelist;
  return std::nullopt;
}

std::string export_decomposition(const HamiltonDecomposition& dec, std::string_view format) {
  const auto f = parse_format(format);
  if (!f) throw UnsupportedFormat("unsupported format '" + std::string(format) + "'");
  return export_decomposition(dec, *f);
}

std::string export_decomposition(const HamiltonDecomposition& dec, ExportFormat format) {
  const DirectionAssignment& a = dec.assignment;
  const int m = a.modulus();
  switch (format) {
    case ExportFormat::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["m"] = m;
      doc["case"] = std::string(case_tag_name(dec.case_tag));
      json triples = json::array();
      for (Index v = 0; v < a.size(); ++v) triples.push_back(a.triple_at(v).word());
      doc["triples"] = std::move(triples);
      if (dec.cycles) {
        json cycles = json::array();
        for (const auto& cycle : *dec.cycles) {
          json jc = json::array();
          for (Index idx : cycle) {
            const Vertex v = Vertex::from_index(idx, m);
            jc.push_back({v.i, v.j, v.k});
          }
          cycles.push_back(std::move(jc));
        }
        doc["cycles"] = std::move(cycles);
      }
      doc["certificate"] = certificate_json(dec.certificate);
      return doc.dump(2) + "\n";
    }
    case ExportFormat::cycles_text: {
      std::string out;
      for (Color c = 0; c < 3; ++c) {
        const auto orbit = dec.cycles ? (*dec.cycles)[static_cast<std::size_t>(c)]
                                      : orbit_from_origin(a, c);
        for (std::size_t n = 0; n < orbit.size(); ++n) {
          if (n) out.push_back(' ');
          out += vertex_text(orbit[n], m);
        }
        out.push_back('\n');
      }
      return out;
    }
    case ExportFormat::arcs_edgelist: {
      std::string out;
      for (Index v = 0; v < a.size(); ++v) {
        for (Color c = 0; c < 3; ++c) {
          out += vertex_text(v, m) + " " + std::to_string(a.direction(c, v)) + " " +
                 std::to_string(c) + "\n";
        }
      }
      return out;
    }
  }
  throw UnsupportedFormat("unsupported format");
}

HamiltonDecomposition import_decomposition(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input");
  if (text[first] == '{') return import_json(text);
  const auto lines = nonempty_lines(text);
  // Cycle text always has three lines; an arc list has 3m^3 >= 81.
  return lines.size() == 3 ? import_cycles(lines) : import_arcs(lines);
}

}  // namespace torus
