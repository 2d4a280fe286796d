#pragma once

// Kempe maps tau_{r,s} = f_s^{-1} o f_r, Kempe swaps on unions of
// alternating cycles, and the sign-product invariant.

#include <string>
#include <vector>

#include "torus/core.hpp"

namespace torus {

/// A vertex set X, as membership over the dense index.
class KempeSupport {
 public:
  explicit KempeSupport(int m);

  static KempeSupport plane(int m, int t);
  /// {S = t, k = 0}.
  static KempeSupport line(int m, int t);
  /// The tau-cycle through `start`, for a precomputed Kempe map.
  static KempeSupport tau_cycle(int m, std::span<const Index> tau, Index start);

  [[nodiscard]] int modulus() const { return m_; }
  [[nodiscard]] bool contains(Index idx) const { return member_[idx] != 0; }
  [[nodiscard]] std::size_t count() const;
  void insert(Index idx) { member_[idx] = 1; }
  void merge(const KempeSupport& other);

 private:
  int m_;
  std::vector<std::uint8_t> member_;
};

/// tau_{r,s}(v) = f_s^{-1}(f_r(v)) as a table over dense indices.
/// Throws InvalidColoring if `assign` is not a coloring, TorusError if r == s.
std::vector<Index> kempe_map(const DirectionAssignment& assign, Color r, Color s);

/// Exchanges the color-r and color-s directions at every vertex of X after
/// checking that X is closed under tau_{r,s}.
DirectionAssignment kempe_swap(const DirectionAssignment& assign, Color r, Color s,
                               const KempeSupport& support);

/// sgn(f_0) sgn(f_1) sgn(f_2).
int sign_product(const DirectionAssignment& assign);

struct ParityBarrierReport {
  int m = 0;
  int canonical_product = 1;
  int hamilton_product = 1;
  bool obstruction = false;
  std::string verdict;
};

ParityBarrierReport parity_barrier_report(int m);

}  // namespace torus
