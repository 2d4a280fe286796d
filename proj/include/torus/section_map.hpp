#pragma once

// Self-maps of the section P_0 = {S = 0}, parameterized by (i,k) with
// j = -i-k. Used for return maps, the odometer, and adapted frames.

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <vector>

#include "torus/core.hpp"

namespace torus {

/// A point of (Z_m)^2. The meaning of the two coordinates depends on the
/// frame: (i,k) on P_0, (u,t) in a bulk frame, (x,y) in a working frame.
struct Point2 {
  int a = 0;
  int b = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Index point_index(Point2 p, int m) { return static_cast<Index>(p.a * m + p.b); }
inline Point2 point_from_index(Index idx, int m) {
  return {static_cast<int>(idx / m), static_cast<int>(idx % m)};
}

/// The vertex (i, t-i-k, k) on layer t.
Vertex section_vertex(Point2 ik, int m, int t = 0);
/// (i,k) coordinates of a vertex.
inline Point2 section_point(const Vertex& v) { return {v.i, v.k}; }

/// Tabulated total self-map of (Z_m)^2.
class SectionMap {
 public:
  SectionMap(int m, std::vector<Index> table);

  static SectionMap from_function(int m, const std::function<Point2(Point2)>& f);
  static SectionMap identity(int m);

  [[nodiscard]] int modulus() const { return m_; }
  [[nodiscard]] Point2 operator()(Point2 p) const {
    return point_from_index(table_[point_index(p, m_)], m_);
  }
  [[nodiscard]] std::span<const Index> table() const { return table_; }

  /// x -> outer(inner(x)).
  [[nodiscard]] SectionMap then(const SectionMap& outer) const;
  [[nodiscard]] SectionMap power(int n) const;
  /// g o this o g^{-1} for a frame change g.
  [[nodiscard]] SectionMap conjugate(const SectionMap& frame, const SectionMap& frame_inverse) const;

  [[nodiscard]] bool is_bijective() const { return !find_collision(table_).has_value(); }

  friend bool operator==(const SectionMap&, const SectionMap&) = default;

 private:
  int m_;
  std::vector<Index> table_;
};

/// Inverse of a modulo m, if it exists.
std::optional<int> mod_inverse(long long a, int m);

using IntMatrix2 = Eigen::Matrix<long long, 2, 2>;
using IntVector2 = Eigen::Matrix<long long, 2, 1>;

/// p -> linear * p + shift over Z_m.
class AffineSectionMap {
 public:
  AffineSectionMap(int m, IntMatrix2 linear, IntVector2 shift = IntVector2::Zero());

  [[nodiscard]] int modulus() const { return m_; }
  [[nodiscard]] const IntMatrix2& linear() const { return linear_; }
  [[nodiscard]] const IntVector2& shift() const { return shift_; }

  [[nodiscard]] Point2 operator()(Point2 p) const;
  /// Determinant of the linear part, reduced mod m.
  [[nodiscard]] int determinant() const;
  [[nodiscard]] bool is_invertible() const { return mod_inverse(determinant(), m_).has_value(); }
  /// Throws ModulusError when the determinant is not a unit.
  [[nodiscard]] AffineSectionMap inverse() const;
  [[nodiscard]] SectionMap tabulate() const;

 private:
  int m_;
  IntMatrix2 linear_;
  IntVector2 shift_;
};

/// Layer map g_t : P_t -> P_{t+1} for color c, on layer-local (i,k) indices.
std::vector<Index> layer_map(const DirectionAssignment& assign, Color c, int t);

/// f_c^m restricted to P_0, by following each orbit for m steps.
SectionMap return_map_by_iteration(const DirectionAssignment& assign, Color c);

/// g_{m-1} o ... o g_0 composed from per-layer tables.
SectionMap return_map_by_layers(const DirectionAssignment& assign, Color c);

}  // namespace torus
