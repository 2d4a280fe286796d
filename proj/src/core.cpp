#include "torus/core.hpp"

#include <algorithm>

#include "torus/section_map.hpp"

namespace torus {

namespace {

// Lexicographic order of the six permutations of (0,1,2).
constexpr std::array<std::array<std::uint8_t, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

constexpr Index kUnset = static_cast<Index>(-1);

}  // namespace

void require_modulus(int m, int minimum) {
  if (m < minimum || m > kMaxModulus) {
    throw ModulusError("modulus " + std::to_string(m) + " outside [" + std::to_string(minimum) +
                       ", " + std::to_string(kMaxModulus) + "]");
  }
}

Vertex::Vertex(long long i, long long j, long long k, int m) : m(m) {
  require_modulus(m, 1);
  this->i = mod(i, m);
  this->j = mod(j, m);
  this->k = mod(k, m);
}

Vertex Vertex::from_index(Index idx, int m) {
  const Index m2 = static_cast<Index>(m) * m;
  return Vertex(idx / m2, (idx / m) % m, idx % m, m);
}

int layer(const Vertex& v) { return mod(v.i + v.j + v.k, v.m); }

Vertex bump(const Vertex& v, Direction dir) {
  switch (dir) {
    case 0:
      return Vertex(v.i + 1, v.j, v.k, v.m);
    case 1:
      return Vertex(v.i, v.j + 1, v.k, v.m);
    case 2:
      return Vertex(v.i, v.j, v.k + 1, v.m);
    default:
      throw TorusError("direction must be 0, 1 or 2");
  }
}

bool DirectionTriple::is_permutation(int d0, int d1, int d2) {
  const auto in_range = [](int d) { return d >= 0 && d <= 2; };
  return in_range(d0) && in_range(d1) && in_range(d2) && d0 != d1 && d0 != d2 && d1 != d2;
}

DirectionTriple::DirectionTriple(int d0, int d1, int d2) {
  if (!is_permutation(d0, d1, d2)) {
    throw TorusError("direction triple (" + std::to_string(d0) + "," + std::to_string(d1) + "," +
                     std::to_string(d2) + ") is not a permutation of (0,1,2)");
  }
  d_ = {static_cast<std::uint8_t>(d0), static_cast<std::uint8_t>(d1),
        static_cast<std::uint8_t>(d2)};
}

DirectionTriple DirectionTriple::parse(std::string_view word) {
  if (word.size() != 3) {
    throw ParseError("direction word must have three characters: '" + std::string(word) + "'");
  }
  std::array<int, 3> d{};
  for (std::size_t c = 0; c < 3; ++c) {
    if (word[c] < '0' || word[c] > '9') {
      throw ParseError("direction word must be digits: '" + std::string(word) + "'");
    }
    d[c] = word[c] - '0';
  }
  return DirectionTriple(d[0], d[1], d[2]);
}

DirectionTriple DirectionTriple::from_code(std::uint8_t code) {
  DirectionTriple t;
  t.d_ = kPermutations[code];
  return t;
}

std::uint8_t DirectionTriple::code() const {
  // d0 selects the pair, d1 > the other remaining value selects within it.
  const int base = 2 * d_[0];
  const int other = 3 - d_[0] - d_[1];
  return static_cast<std::uint8_t>(base + (d_[1] > other ? 1 : 0));
}

std::string DirectionTriple::word() const {
  return {static_cast<char>('0' + d_[0]), static_cast<char>('0' + d_[1]),
          static_cast<char>('0' + d_[2])};
}

DirectionTriple DirectionTriple::swapped(Color r, Color s) const {
  DirectionTriple t = *this;
  std::swap(t.d_[static_cast<std::size_t>(r)], t.d_[static_cast<std::size_t>(s)]);
  return t;
}

DirectionAssignment::DirectionAssignment(int m, DirectionTriple fill) : m_(m) {
  require_modulus(m, 3);
  codes_.assign(static_cast<std::size_t>(m) * m * m, fill.code());
}

DirectionAssignment DirectionAssignment::from_raw(int m, std::span<const std::array<int, 3>> raw) {
  DirectionAssignment out(m, kCanonicalTriple);
  if (raw.size() != out.codes_.size()) {
    throw TorusError("expected " + std::to_string(out.codes_.size()) + " triples, got " +
                     std::to_string(raw.size()));
  }
  for (Index idx = 0; idx < out.size(); ++idx) {
    const auto& t = raw[idx];
    if (!DirectionTriple::is_permutation(t[0], t[1], t[2])) {
      throw IllFormedTriple(idx, std::to_string(t[0]) + std::to_string(t[1]) +
                                     std::to_string(t[2]) + " is not a permutation of 012");
    }
    out.codes_[idx] = DirectionTriple(t[0], t[1], t[2]).code();
  }
  return out;
}

DirectionTriple DirectionAssignment::triple_at(const Vertex& v) const {
  if (v.m != m_) throw ModulusMismatch(v.m, m_);
  return triple_at(v.index());
}

Direction DirectionAssignment::direction(Color c, Index idx) const {
  return kPermutations[codes_[idx]][static_cast<std::size_t>(c)];
}

void DirectionAssignment::set_triple(const Vertex& v, DirectionTriple t) {
  if (v.m != m_) throw ModulusMismatch(v.m, m_);
  set_triple(v.index(), t);
}

DirectionAssignment canonical_assignment(int m) { return DirectionAssignment(m, kCanonicalTriple); }

Vertex color_step(const DirectionAssignment& assign, Color c, const Vertex& v) {
  return bump(v, assign.triple_at(v)[c]);
}

std::vector<Index> color_map(const DirectionAssignment& assign, Color c) {
  std::vector<Index> out(assign.size());
  for (Index idx = 0; idx < assign.size(); ++idx) out[idx] = assign.step(c, idx);
  return out;
}

std::optional<Collision> find_collision(std::span<const Index> step) {
  std::vector<Index> preimage(step.size(), kUnset);
  for (Index v = 0; v < step.size(); ++v) {
    const Index w = step[v];
    if (w >= step.size()) throw TorusError("map leaves its domain at " + std::to_string(v));
    if (preimage[w] != kUnset) return Collision{preimage[w], v, w};
    preimage[w] = v;
  }
  return std::nullopt;
}

std::vector<std::size_t> CycleDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  return out;
}

CycleDecomposition cycle_decomposition(std::span<const Index> step) {
  if (auto hit = find_collision(step)) throw NotAPermutation(hit->first, hit->second, hit->image);
  CycleDecomposition dec;
  dec.element_count = step.size();
  std::vector<bool> seen(step.size(), false);
  for (Index start = 0; start < step.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Index> cycle;
    for (Index v = start; !seen[v]; v = step[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

std::vector<std::size_t> cycle_lengths(std::span<const Index> step) {
  if (auto hit = find_collision(step)) throw NotAPermutation(hit->first, hit->second, hit->image);
  std::vector<std::size_t> out;
  std::vector<bool> seen(step.size(), false);
  for (Index start = 0; start < step.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Index v = start; !seen[v]; v = step[v]) {
      seen[v] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

int permutation_sign(const CycleDecomposition& dec) {
  int sign = 1;
  for (const auto& c : dec.cycles) {
    if (c.size() % 2 == 0) sign = -sign;
  }
  return sign;
}

int permutation_sign(std::span<const Index> step) {
  int sign = 1;
  for (std::size_t len : cycle_lengths(step)) {
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::size_t orbit_length(std::span<const Index> step, Index start) {
  std::size_t len = 1;
  for (Index v = step[start]; v != start; v = step[v]) {
    if (++len > step.size()) throw TorusError("orbit does not close: map is not a permutation");
  }
  return len;
}

ColoringReport is_valid_coloring(const DirectionAssignment& assign) {
  ColoringReport report;
  for (Color c = 0; c < 3; ++c) {
    const auto map = color_map(assign, c);
    report.collisions[static_cast<std::size_t>(c)] = find_collision(map);
    if (report.collisions[static_cast<std::size_t>(c)]) report.valid = false;
  }
  return report;
}

bool validity_via_return(const DirectionAssignment& assign) {
  for (Color c = 0; c < 3; ++c) {
    if (!return_map_by_layers(assign, c).is_bijective()) return false;
  }
  return true;
}

}  // namespace torus
