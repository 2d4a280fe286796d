#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "torus/core.hpp"
#include "torus/odd_witness.hpp"
#include "torus/route_e.hpp"
#include "torus/section_map.hpp"

using namespace torus;

namespace {

DirectionAssignment random_assignment(int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  return DirectionAssignment::tabulate(
      m, [&](const Vertex&) { return DirectionTriple::from_code(static_cast<std::uint8_t>(pick(rng))); });
}

std::vector<int> as_int(std::span<const Index> t) { return {t.begin(), t.end()}; }

}  // namespace

TEST(Layer, Examples) {
  EXPECT_EQ(layer(Vertex(1, 2, 3, 6)), 0);
  EXPECT_EQ(layer(Vertex(0, 0, 0, 5)), 0);
  EXPECT_EQ(layer(Vertex(3, 3, 3, 4)), 1);
}

TEST(Vertex, CoordinatesAreReduced) {
  const Vertex v(-1, 7, 12, 5);
  EXPECT_EQ(v, Vertex(4, 2, 2, 5));
  EXPECT_EQ(Vertex::from_index(v.index(), 5), v);
}

TEST(Vertex, ModulusBoundsAreEnforced) {
  EXPECT_THROW(DirectionAssignment(2, kCanonicalTriple), ModulusError);
  EXPECT_THROW(canonical_assignment(kMaxModulus + 1), ModulusError);
}

TEST(Bump, Examples) {
  EXPECT_EQ(bump(Vertex(0, 0, 0, 5), 0), Vertex(1, 0, 0, 5));
  EXPECT_EQ(bump(Vertex(2, 2, 4, 5), 2), Vertex(2, 2, 0, 5));
  EXPECT_EQ(bump(Vertex(1, 4, 0, 5), 1), Vertex(1, 0, 0, 5));
}

TEST(Bump, IndexFormAgrees) {
  for (int m : {3, 4, 7}) {
    for (Index idx = 0; idx < static_cast<Index>(m * m * m); ++idx) {
      for (int d = 0; d < 3; ++d) {
        EXPECT_EQ(bump_index(idx, d, m), bump(Vertex::from_index(idx, m), d).index());
      }
    }
  }
}

TEST(ColorStep, CanonicalExamples) {
  const auto a = canonical_assignment(3);
  EXPECT_EQ(color_step(a, 0, Vertex(0, 0, 0, 3)), Vertex(1, 0, 0, 3));
  EXPECT_EQ(color_step(a, 2, Vertex(1, 1, 2, 3)), Vertex(1, 1, 0, 3));
}

TEST(ColorStep, MixedModulusIsRejected) {
  const auto a = canonical_assignment(3);
  EXPECT_THROW((void)a.triple_at(Vertex(0, 0, 0, 4)), ModulusMismatch);
}

TEST(ColorStep, EveryStepRaisesTheLayerByOne) {
  std::mt19937 rng(7);
  for (int m = 3; m <= 12; ++m) {
    std::vector<DirectionAssignment> cases{canonical_assignment(m), odd_closed_form(m),
                                           random_assignment(m, rng)};
    if (m % 2 == 0 && m >= 6) cases.push_back(route_e_assignment(m));
    for (const auto& a : cases) {
      for (Index idx = 0; idx < a.size(); ++idx) {
        const Vertex v = Vertex::from_index(idx, m);
        for (Color c = 0; c < 3; ++c) {
          ASSERT_EQ(layer(color_step(a, c, v)), mod(layer(v) + 1, m));
        }
      }
    }
  }
}

TEST(DirectionTriple, CodesRoundTrip) {
  for (std::uint8_t code = 0; code < 6; ++code) {
    const auto t = DirectionTriple::from_code(code);
    EXPECT_EQ(t.code(), code);
    EXPECT_EQ(DirectionTriple::parse(t.word()), t);
  }
  EXPECT_EQ(DirectionTriple(1, 2, 0).word(), "120");
  EXPECT_EQ(DirectionTriple(2, 1, 0).swapped(0, 2), DirectionTriple(0, 1, 2));
}

TEST(DirectionTriple, NonPermutationsAreRejected) {
  EXPECT_THROW(DirectionTriple(0, 0, 1), TorusError);
  EXPECT_THROW(DirectionTriple::parse("011"), TorusError);
  EXPECT_THROW(DirectionTriple::parse("01"), ParseError);
  EXPECT_THROW(DirectionTriple::parse("0a2"), ParseError);
}

TEST(DirectionAssignment, IllFormedTripleIsRejectedBeforeBijectivity) {
  const int m = 3;
  std::vector<std::array<int, 3>> raw(27, {0, 1, 2});
  raw[5] = {0, 0, 2};
  try {
    (void)DirectionAssignment::from_raw(m, raw);
    FAIL() << "expected IllFormedTriple";
  } catch (const IllFormedTriple& e) {
    EXPECT_EQ(e.vertex_index, 5u);
  }
}

TEST(CycleDecomposition, IdentityHasOnlyFixedPoints) {
  std::vector<Index> id(27);
  std::iota(id.begin(), id.end(), Index{0});
  const auto dec = cycle_decomposition(id);
  EXPECT_EQ(dec.cycle_count(), 27u);
  EXPECT_EQ(dec.element_count, 27u);
}

TEST(CycleDecomposition, CanonicalColorIsNineThreeCycles) {
  const auto dec = cycle_decomposition(color_map(canonical_assignment(3), 0));
  EXPECT_EQ(dec.cycle_count(), 9u);
  for (auto len : dec.lengths()) EXPECT_EQ(len, 3u);
}

TEST(CycleDecomposition, OdometerIsOneCycle) {
  const auto dec = cycle_decomposition(odometer(3).table());
  ASSERT_EQ(dec.cycle_count(), 1u);
  EXPECT_EQ(dec.cycles[0].size(), 9u);
}

TEST(CycleDecomposition, CollisionIsReportedInIndexOrder) {
  const std::vector<Index> f{1, 2, 1, 0};
  try {
    (void)cycle_decomposition(f);
    FAIL() << "expected NotAPermutation";
  } catch (const NotAPermutation& e) {
    EXPECT_EQ(e.first, 0u);
    EXPECT_EQ(e.second, 2u);
    EXPECT_EQ(e.image, 1u);
  }
}

TEST(CycleDecomposition, PartitionsTheDomain) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Index> p(1 + trial * 3);
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), rng);
    const auto dec = cycle_decomposition(p);
    std::vector<int> seen(p.size(), 0);
    std::size_t total = 0;
    for (const auto& c : dec.cycles) {
      total += c.size();
      for (std::size_t n = 0; n < c.size(); ++n) {
        ++seen[c[n]];
        EXPECT_EQ(p[c[n]], c[(n + 1) % c.size()]);
      }
    }
    EXPECT_EQ(total, p.size());
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(PermutationSign, Examples) {
  EXPECT_EQ(permutation_sign(std::vector<Index>{1, 2, 3, 0}), -1);
  const auto canon = color_map(canonical_assignment(4), 0);
  EXPECT_EQ(permutation_sign(canon), 1);
  std::vector<Index> big(64);
  for (Index v = 0; v < 64; ++v) big[v] = (v + 1) % 64;
  EXPECT_EQ(permutation_sign(big), -1);
}

TEST(PermutationSign, AgreesWithInversionCount) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Index> p(2 + trial % 40);
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(permutation_sign(p), oracle::sign_by_inversions(as_int(p)));
    EXPECT_EQ(permutation_sign(cycle_decomposition(p)), oracle::sign_by_inversions(as_int(p)));
  }
}

TEST(PermutationSign, MultiplicativeOverDisjointCycles) {
  // A permutation built from cycles of known lengths.
  for (const std::vector<std::size_t>& lens :
       std::vector<std::vector<std::size_t>>{{2, 3}, {4, 4, 1}, {5}, {2, 2, 2}, {6, 1, 3}}) {
    std::vector<Index> p;
    int expected = 1;
    for (std::size_t len : lens) {
      const Index base = static_cast<Index>(p.size());
      for (std::size_t n = 0; n < len; ++n) p.push_back(base + static_cast<Index>((n + 1) % len));
      expected *= len % 2 == 0 ? -1 : 1;
    }
    EXPECT_EQ(permutation_sign(p), expected);
  }
}

TEST(IsValidColoring, CanonicalIsValid) {
  for (int m = 3; m <= 9; ++m) EXPECT_TRUE(is_valid_coloring(canonical_assignment(m)).valid);
}

TEST(IsValidColoring, RouteEIsValidAtSix) {
  EXPECT_TRUE(is_valid_coloring(route_e_assignment(6)).valid);
}

TEST(IsValidColoring, ReportsCollisionWitness) {
  auto a = canonical_assignment(4);
  a.set_triple(Vertex(1, 2, 3, 4), DirectionTriple(1, 0, 2));
  const auto r = is_valid_coloring(a);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.collisions[0].has_value());
  const auto& hit = *r.collisions[0];
  EXPECT_EQ(a.step(0, hit.first), hit.image);
  EXPECT_EQ(a.step(0, hit.second), hit.image);
  EXPECT_FALSE(r.collisions[2].has_value());
}

TEST(ValidityViaReturn, Examples) {
  EXPECT_TRUE(validity_via_return(route_e_assignment(8)));
  EXPECT_TRUE(validity_via_return(canonical_assignment(5)));
}

TEST(ValidityViaReturn, AgreesWithDirectCheckOnPerturbations) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> code(0, 5);
  int valid_seen = 0;
  int invalid_seen = 0;
  for (int m : {4, 6}) {
    std::uniform_int_distribution<int> coord(0, m - 1);
    std::uniform_int_distribution<int> low_layer(0, 2);
    for (int trial = 0; trial < 150; ++trial) {
      auto a = canonical_assignment(m);
      if (trial % 2 == 0) {
        // Whole low planes get one uniform triple each.
        for (int t = 0; t < 3; ++t) {
          const auto triple = DirectionTriple::from_code(static_cast<std::uint8_t>(code(rng)));
          for (Index idx = 0; idx < a.size(); ++idx) {
            if (layer(Vertex::from_index(idx, m)) == t) a.set_triple(idx, triple);
          }
        }
      } else {
        const int changes = 1 + trial % 3;
        for (int n = 0; n < changes; ++n) {
          const int i = coord(rng);
          const int k = coord(rng);
          const Vertex v(i, low_layer(rng) - i - k, k, m);
          a.set_triple(v, DirectionTriple::from_code(static_cast<std::uint8_t>(code(rng))));
        }
      }
      const bool direct = is_valid_coloring(a).valid;
      ASSERT_EQ(validity_via_return(a), direct);
      (direct ? valid_seen : invalid_seen)++;
    }
  }
  EXPECT_GT(valid_seen, 0);
  EXPECT_GT(invalid_seen, 0);
}

TEST(ReturnMap, IterationAndLayerCompositionAgree) {
  std::mt19937 rng(5);
  for (int m = 3; m <= 8; ++m) {
    const auto a = random_assignment(m, rng);
    for (Color c = 0; c < 3; ++c) {
      EXPECT_EQ(return_map_by_iteration(a, c), return_map_by_layers(a, c));
    }
  }
}

TEST(ReturnMap, MatchesBruteForce) {
  const int m = 7;
  const auto a = odd_closed_form(m);
  const oracle::Rule rule = [m](int i, int j, int k) { return oracle::odd_rule(i, j, k, m); };
  for (Color c = 0; c < 3; ++c) {
    const auto f = return_map_by_layers(a, c);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        const auto [ri, rk] = oracle::return_ik(rule, c, i, k, m);
        EXPECT_EQ(f({i, k}), (Point2{ri, rk}));
      }
    }
  }
}

TEST(SectionMap, ModInverse) {
  EXPECT_EQ(mod_inverse(-2, 5), 2);
  EXPECT_EQ(mod_inverse(3, 7), 5);
  EXPECT_FALSE(mod_inverse(2, 6).has_value());
}

TEST(SectionMap, AffineInverseComposesToIdentity) {
  for (int m : {5, 6, 9}) {
    IntMatrix2 a;
    a << 2, 1, -1, -1;
    const AffineSectionMap f(m, a, IntVector2(3, 4));
    const auto g = f.inverse();
    EXPECT_EQ(f.tabulate().then(g.tabulate()), SectionMap::identity(m));
  }
  IntMatrix2 singular;
  singular << 2, 0, 0, 1;
  EXPECT_THROW((void)AffineSectionMap(6, singular).inverse(), ModulusError);
}

TEST(SectionMap, PowerAndConjugate) {
  const int m = 6;
  const auto o = odometer(m);
  const auto om = o.power(m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) EXPECT_EQ(om({u, v}), (Point2{u, (v + 1) % m}));
  }
  IntMatrix2 swap;
  swap << 0, 1, 1, 0;
  const auto s = AffineSectionMap(m, swap).tabulate();
  const auto conj = o.conjugate(s, s);
  EXPECT_EQ(conj({0, 0}), (Point2{1, 1}));
  EXPECT_EQ(conj({3, 2}), (Point2{3, 3}));
  EXPECT_EQ(conj({5, 0}), (Point2{0, 1}));
}
