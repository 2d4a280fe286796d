#pragma once

// Exact arithmetic on (Z_m)^3, direction assignments, and generic
// permutation machinery (cycle decomposition, sign).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torus/error.hpp"

namespace torus {

using Color = int;
using Direction = int;
using Index = std::uint32_t;

inline constexpr int kMaxModulus = 1024;

/// Least non-negative residue of a modulo m.
constexpr int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// Throws ModulusError unless minimum <= m <= kMaxModulus.
void require_modulus(int m, int minimum);

/// A point of (Z_m)^3. Coordinates are always reduced.
struct Vertex {
  int i = 0;
  int j = 0;
  int k = 0;
  int m = 1;

  Vertex() = default;
  Vertex(long long i, long long j, long long k, int m);

  /// Dense index i*m^2 + j*m + k.
  [[nodiscard]] Index index() const {
    return static_cast<Index>((i * m + j) * m + k);
  }
  static Vertex from_index(Index idx, int m);

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// S(i,j,k) = i+j+k mod m.
int layer(const Vertex& v);

/// Increments coordinate `dir` (0 -> i, 1 -> j, 2 -> k).
Vertex bump(const Vertex& v, Direction dir);

/// Dense-index form of bump.
inline Index bump_index(Index idx, Direction dir, int m) {
  const Index m2 = static_cast<Index>(m) * m;
  const Index i = idx / m2;
  const Index j = (idx / m) % m;
  const Index k = idx % m;
  switch (dir) {
    case 0:
      return (i + 1 == static_cast<Index>(m)) ? idx - i * m2 : idx + m2;
    case 1:
      return (j + 1 == static_cast<Index>(m)) ? idx - j * m : idx + m;
    default:
      return (k + 1 == static_cast<Index>(m)) ? idx - k : idx + 1;
  }
}

/// Per-vertex assignment of an out-arc direction to each color; always a
/// permutation of (0,1,2).
class DirectionTriple {
 public:
  DirectionTriple() : d_{0, 1, 2} {}
  DirectionTriple(int d0, int d1, int d2);

  static bool is_permutation(int d0, int d1, int d2);
  /// Parses the three-character word "d0d1d2".
  static DirectionTriple parse(std::string_view word);
  static DirectionTriple from_code(std::uint8_t code);

  [[nodiscard]] Direction operator[](Color c) const { return d_[static_cast<std::size_t>(c)]; }
  /// Position of this permutation in the lexicographic list 012,021,102,120,201,210.
  [[nodiscard]] std::uint8_t code() const;
  [[nodiscard]] std::string word() const;
  /// The triple with the entries of colors r and s exchanged.
  [[nodiscard]] DirectionTriple swapped(Color r, Color s) const;

  friend bool operator==(const DirectionTriple&, const DirectionTriple&) = default;

 private:
  std::array<std::uint8_t, 3> d_;
};

inline const DirectionTriple kCanonicalTriple{0, 1, 2};

/// Total map Vertex -> DirectionTriple, stored densely by vertex index.
class DirectionAssignment {
 public:
  DirectionAssignment(int m, DirectionTriple fill);

  /// Builds from raw integer triples, rejecting any non-permutation with
  /// IllFormedTriple before anything else is examined.
  static DirectionAssignment from_raw(int m, std::span<const std::array<int, 3>> raw);

  template <typename Rule>
  static DirectionAssignment tabulate(int m, Rule&& rule) {
    DirectionAssignment out(m, kCanonicalTriple);
    const Index n = out.size();
    for (Index idx = 0; idx < n; ++idx) {
      out.codes_[idx] = rule(Vertex::from_index(idx, m)).code();
    }
    return out;
  }

  [[nodiscard]] int modulus() const { return m_; }
  [[nodiscard]] Index size() const { return static_cast<Index>(codes_.size()); }

  [[nodiscard]] DirectionTriple triple_at(const Vertex& v) const;
  [[nodiscard]] DirectionTriple triple_at(Index idx) const {
    return DirectionTriple::from_code(codes_[idx]);
  }
  [[nodiscard]] Direction direction(Color c, Index idx) const;

  /// Successor of vertex `idx` under color c.
  [[nodiscard]] Index step(Color c, Index idx) const {
    return bump_index(idx, direction(c, idx), m_);
  }

  void set_triple(Index idx, DirectionTriple t) { codes_[idx] = t.code(); }
  void set_triple(const Vertex& v, DirectionTriple t);

  friend bool operator==(const DirectionAssignment&, const DirectionAssignment&) = default;

 private:
  int m_;
  std::vector<std::uint8_t> codes_;
};

DirectionAssignment canonical_assignment(int m);

/// v + e_{d_c(v)}.
Vertex color_step(const DirectionAssignment& assign, Color c, const Vertex& v);

/// The induced map g_c tabulated over dense vertex indices.
std::vector<Index> color_map(const DirectionAssignment& assign, Color c);

struct Collision {
  Index first;
  Index second;
  Index image;
  friend bool operator==(const Collision&, const Collision&) = default;
};

/// First collision in index order: the smallest `second` whose image was
/// already hit by an earlier `first`.
std::optional<Collision> find_collision(std::span<const Index> step);

struct CycleDecomposition {
  std::vector<std::vector<Index>> cycles;
  std::size_t element_count = 0;

  [[nodiscard]] std::size_t cycle_count() const { return cycles.size(); }
  [[nodiscard]] std::vector<std::size_t> lengths() const;
  [[nodiscard]] bool is_single_cycle() const { return cycles.size() == 1; }
};

/// Cycles of a self-map on {0..n-1}, each starting at its smallest element,
/// ordered by that element. Throws NotAPermutation if the map collides.
CycleDecomposition cycle_decomposition(std::span<const Index> step);

/// Cycle lengths only, in the same order as cycle_decomposition.
std::vector<std::size_t> cycle_lengths(std::span<const Index> step);

/// Product over cycles of (-1)^(len-1).
int permutation_sign(const CycleDecomposition& dec);
int permutation_sign(std::span<const Index> step);

/// Length of the orbit of `start` under a permutation.
std::size_t orbit_length(std::span<const Index> step, Index start);

struct ColoringReport {
  bool valid = true;
  std::array<std::optional<Collision>, 3> collisions;
};

/// True iff each induced map g_c is a bijection.
ColoringReport is_valid_coloring(const DirectionAssignment& assign);

/// Composes the per-layer maps g_{m-1} o ... o g_0 on P_0 for each color and
/// checks bijectivity of the composite.
bool validity_via_return(const DirectionAssignment& assign);

}  // namespace torus
