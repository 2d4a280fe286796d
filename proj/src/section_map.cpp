#include "torus/section_map.hpp"

#include <numeric>

namespace torus {

Vertex section_vertex(Point2 ik, int m, int t) {
  return Vertex(ik.a, static_cast<long long>(t) - ik.a - ik.b, ik.b, m);
}

SectionMap::SectionMap(int m, std::vector<Index> table) : m_(m), table_(std::move(table)) {
  require_modulus(m, 1);
  const std::size_t n = static_cast<std::size_t>(m) * m;
  if (table_.size() != n) throw TorusError("section map table has wrong size");
  for (Index v : table_) {
    if (v >= n) throw TorusError("section map image out of range");
  }
}

SectionMap SectionMap::from_function(int m, const std::function<Point2(Point2)>& f) {
  require_modulus(m, 1);
  std::vector<Index> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      Point2 img = f({a, b});
      img = {mod(img.a, m), mod(img.b, m)};
      table[point_index({a, b}, m)] = point_index(img, m);
    }
  }
  return SectionMap(m, std::move(table));
}

SectionMap SectionMap::identity(int m) {
  std::vector<Index> table(static_cast<std::size_t>(m) * m);
  std::iota(table.begin(), table.end(), Index{0});
  return SectionMap(m, std::move(table));
}

SectionMap SectionMap::then(const SectionMap& outer) const {
  if (outer.m_ != m_) throw ModulusMismatch(m_, outer.m_);
  std::vector<Index> table(table_.size());
  for (std::size_t p = 0; p < table_.size(); ++p) table[p] = outer.table_[table_[p]];
  return SectionMap(m_, std::move(table));
}

SectionMap SectionMap::power(int n) const {
  SectionMap out = identity(m_);
  for (int r = 0; r < n; ++r) out = out.then(*this);
  return out;
}

SectionMap SectionMap::conjugate(const SectionMap& frame, const SectionMap& frame_inverse) const {
  return frame_inverse.then(*this).then(frame);
}

std::optional<int> mod_inverse(long long a, int m) {
  if (m == 1) return 0;
  long long old_r = mod(a, m), r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, m);
}

AffineSectionMap::AffineSectionMap(int m, IntMatrix2 linear, IntVector2 shift)
    : m_(m), linear_(std::move(linear)), shift_(std::move(shift)) {
  require_modulus(m, 1);
}

Point2 AffineSectionMap::operator()(Point2 p) const {
  const IntVector2 image = linear_ * IntVector2(p.a, p.b) + shift_;
  return {mod(image(0), m_), mod(image(1), m_)};
}

int AffineSectionMap::determinant() const {
  return mod(linear_(0, 0) * linear_(1, 1) - linear_(0, 1) * linear_(1, 0), m_);
}

AffineSectionMap AffineSectionMap::inverse() const {
  const auto det_inv = mod_inverse(determinant(), m_);
  if (!det_inv) throw ModulusError("affine map is not invertible mod " + std::to_string(m_));
  IntMatrix2 adj;
  adj << linear_(1, 1), -linear_(0, 1), -linear_(1, 0), linear_(0, 0);
  IntMatrix2 inv = (adj * *det_inv).unaryExpr([this](long long x) -> long long { return mod(x, m_); });
  IntVector2 shift = (-(inv * shift_)).unaryExpr([this](long long x) -> long long { return mod(x, m_); });
  return AffineSectionMap(m_, inv, shift);
}

SectionMap AffineSectionMap::tabulate() const {
  return SectionMap::from_function(m_, [this](Point2 p) { return (*this)(p); });
}

std::vector<Index> layer_map(const DirectionAssignment& assign, Color c, int t) {
  const int m = assign.modulus();
  const Index m2 = static_cast<Index>(m) * m;
  std::vector<Index> out(m2);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const Index v = (static_cast<Index>(i) * m + static_cast<Index>(mod(t - i - k, m))) * m + k;
      const Index w = assign.step(c, v);
      out[point_index({i, k}, m)] = (w / m2) * m + w % m;
    }
  }
  return out;
}

SectionMap return_map_by_iteration(const DirectionAssignment& assign, Color c) {
  const int m = assign.modulus();
  std::vector<Index> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      Index v = section_vertex({i, k}, m).index();
      for (int s = 0; s < m; ++s) v = assign.step(c, v);
      const Vertex w = Vertex::from_index(v, m);
      if (layer(w) != 0) throw TorusError("m-step orbit did not return to P_0");
      table[point_index({i, k}, m)] = point_index(section_point(w), m);
    }
  }
  return SectionMap(m, std::move(table));
}

SectionMap return_map_by_layers(const DirectionAssignment& assign, Color c) {
  const int m = assign.modulus();
  std::vector<Index> composite(static_cast<std::size_t>(m) * m);
  std::iota(composite.begin(), composite.end(), Index{0});
  for (int t = 0; t < m; ++t) {
    const auto g = layer_map(assign, c, t);
    for (auto& p : composite) p = g[p];
  }
  return SectionMap(m, std::move(composite));
}

}  // namespace torus
