#include "torus/kempe.hpp"

#include <algorithm>

namespace torus {

namespace {

void require_distinct_colors(Color r, Color s) {
  if (r < 0 || r > 2 || s < 0 || s > 2) throw TorusError("colors must be 0, 1 or 2");
  if (r == s) throw TorusError("Kempe colors must differ");
}

std::vector<Index> inverse_color_map(const DirectionAssignment& assign, Color c) {
  const auto forward = color_map(assign, c);
  if (auto hit = find_collision(forward)) {
    throw InvalidColoring("color " + std::to_string(c) + " is not a permutation: indices " +
                          std::to_string(hit->first) + " and " + std::to_string(hit->second) +
                          " collide");
  }
  std::vector<Index> inverse(forward.size());
  for (Index v = 0; v < forward.size(); ++v) inverse[forward[v]] = v;
  return inverse;
}

}  // namespace

KempeSupport::KempeSupport(int m) : m_(m) {
  require_modulus(m, 3);
  member_.assign(static_cast<std::size_t>(m) * m * m, 0);
}

KempeSupport KempeSupport::plane(int m, int t) {
  KempeSupport x(m);
  for (Index idx = 0; idx < x.member_.size(); ++idx) {
    if (layer(Vertex::from_index(idx, m)) == mod(t, m)) x.member_[idx] = 1;
  }
  return x;
}

KempeSupport KempeSupport::line(int m, int t) {
  KempeSupport x(m);
  for (int i = 0; i < m; ++i) x.insert(Vertex(i, static_cast<long long>(t) - i, 0, m).index());
  return x;
}

KempeSupport KempeSupport::tau_cycle(int m, std::span<const Index> tau, Index start) {
  KempeSupport x(m);
  Index v = start;
  do {
    x.insert(v);
    v = tau[v];
  } while (v != start);
  return x;
}

std::size_t KempeSupport::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), std::uint8_t{1}));
}

void KempeSupport::merge(const KempeSupport& other) {
  if (other.m_ != m_) throw ModulusMismatch(m_, other.m_);
  for (std::size_t idx = 0; idx < member_.size(); ++idx) member_[idx] |= other.member_[idx];
}

std::vector<Index> kempe_map(const DirectionAssignment& assign, Color r, Color s) {
  require_distinct_colors(r, s);
  if (auto report = is_valid_coloring(assign); !report.valid) {
    throw InvalidColoring("Kempe map requires a valid coloring");
  }
  const auto s_inverse = inverse_color_map(assign, s);
  std::vector<Index> tau(assign.size());
  for (Index v = 0; v < assign.size(); ++v) tau[v] = s_inverse[assign.step(r, v)];
  return tau;
}

DirectionAssignment kempe_swap(const DirectionAssignment& assign, Color r, Color s,
                               const KempeSupport& support) {
  require_distinct_colors(r, s);
  if (support.modulus() != assign.modulus()) {
    throw ModulusMismatch(support.modulus(), assign.modulus());
  }
  const auto tau = kempe_map(assign, r, s);
  // tau is a permutation, so tau(X) within X makes X a union of tau-cycles.
  for (Index v = 0; v < assign.size(); ++v) {
    if (support.contains(v) && !support.contains(tau[v])) throw SupportNotClosed(v);
  }
  DirectionAssignment out = assign;
  for (Index v = 0; v < assign.size(); ++v) {
    if (support.contains(v)) out.set_triple(v, assign.triple_at(v).swapped(r, s));
  }
  return out;
}

int sign_product(const DirectionAssignment& assign) {
  int product = 1;
  for (Color c = 0; c < 3; ++c) {
    const auto map = color_map(assign, c);
    if (find_collision(map)) throw InvalidColoring("sign product requires a valid coloring");
    product *= permutation_sign(map);
  }
  return product;
}

ParityBarrierReport parity_barrier_report(int m) {
  require_modulus(m, 3);
  ParityBarrierReport report;
  report.m = m;
  report.canonical_product = sign_product(canonical_assignment(m));
  // A Hamilton cycle on N = m^3 vertices has sign (-1)^(N-1).
  const long long n = static_cast<long long>(m) * m * m;
  const int hamilton_sign = (n - 1) % 2 == 0 ? 1 : -1;
  report.hamilton_product = hamilton_sign * hamilton_sign * hamilton_sign;
  report.obstruction = report.canonical_product != report.hamilton_product;
  report.verdict = report.obstruction
                       ? "unreachable by Kempe swaps from canonical"
                       : "no parity obstruction";
  return report;
}

}  // namespace torus
