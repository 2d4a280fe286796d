#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "torus/kempe.hpp"
#include "torus/odd_witness.hpp"
#include "torus/witness_m4.hpp"

using namespace torus;

namespace {

constexpr std::uint32_t kSwapSeed = 0x5eed2024;

int oracle_sign_product(const DirectionAssignment& a) {
  const int m = a.modulus();
  const oracle::Rule rule = [&](int i, int j, int k) {
    const auto t = a.triple_at(Vertex(i, j, k, m));
    return oracle::Triple{t[0], t[1], t[2]};
  };
  int p = 1;
  for (int c = 0; c < 3; ++c) p *= oracle::sign_by_cycles(oracle::successor(rule, c, m));
  return p;
}

KempeSupport random_cycle_union(const std::vector<Index>& tau, int m, std::mt19937& rng) {
  KempeSupport x(m);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(tau.size() - 1));
  std::uniform_int_distribution<int> how_many(1, 4);
  for (int n = how_many(rng); n > 0; --n) x.merge(KempeSupport::tau_cycle(m, tau, pick(rng)));
  return x;
}

}  // namespace

TEST(KempeMap, CanonicalShiftsIAndJ) {
  const int m = 5;
  const auto tau = kempe_map(canonical_assignment(m), 0, 1);
  for (Index idx = 0; idx < tau.size(); ++idx) {
    const Vertex v = Vertex::from_index(idx, m);
    EXPECT_EQ(tau[idx], Vertex(v.i + 1, v.j - 1, v.k, m).index());
  }
}

TEST(KempeMap, PreservesLayer) {
  const int m = 6;
  for (const auto& a : {canonical_assignment(m), odd_closed_form(m)}) {
    for (Color r = 0; r < 3; ++r) {
      for (Color s = 0; s < 3; ++s) {
        if (r == s) continue;
        const auto tau = kempe_map(a, r, s);
        for (Index idx = 0; idx < tau.size(); ++idx) {
          ASSERT_EQ(layer(Vertex::from_index(tau[idx], m)), layer(Vertex::from_index(idx, m)));
        }
      }
    }
  }
}

TEST(KempeMap, CyclesLieInOnePlane) {
  for (int m = 3; m <= 10; ++m) {
    for (const auto& a : {canonical_assignment(m), odd_closed_form(m)}) {
      for (auto [r, s] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const auto dec = cycle_decomposition(kempe_map(a, r, s));
        for (const auto& cyc : dec.cycles) {
          const int t = layer(Vertex::from_index(cyc.front(), m));
          for (Index v : cyc) ASSERT_EQ(layer(Vertex::from_index(v, m)), t);
        }
      }
    }
  }
}

TEST(KempeMap, CanonicalIsOneCycleOnL0) {
  const int m = 7;
  const auto tau = kempe_map(canonical_assignment(m), 0, 1);
  const auto cyc = KempeSupport::tau_cycle(m, tau, Vertex(0, 0, 0, m).index());
  EXPECT_EQ(cyc.count(), static_cast<std::size_t>(m));
  const auto l0 = KempeSupport::line(m, 0);
  for (Index idx = 0; idx < tau.size(); ++idx) EXPECT_EQ(cyc.contains(idx), l0.contains(idx));
}

TEST(KempeMap, RejectsBadInput) {
  EXPECT_THROW((void)kempe_map(canonical_assignment(4), 1, 1), TorusError);
  auto bad = canonical_assignment(4);
  bad.set_triple(Vertex(0, 0, 0, 4), DirectionTriple(1, 0, 2));
  EXPECT_THROW((void)kempe_map(bad, 0, 1), InvalidColoring);
}

TEST(KempeSwap, EmptySupportIsIdentity) {
  const auto a = odd_closed_form(5);
  EXPECT_EQ(kempe_swap(a, 0, 2, KempeSupport(5)), a);
}

TEST(KempeSwap, WholePlaneIsAlwaysAccepted) {
  std::mt19937 rng(kSwapSeed);
  for (int m = 3; m <= 8; ++m) {
    auto a = canonical_assignment(m);
    for (int n = 0; n < 12; ++n) {
      const int t = static_cast<int>(rng() % static_cast<unsigned>(m));
      const Color r = static_cast<Color>(rng() % 3);
      const Color s = (r + 1 + static_cast<Color>(rng() % 2)) % 3;
      ASSERT_NO_THROW(a = kempe_swap(a, r, s, KempeSupport::plane(m, t)));
      ASSERT_TRUE(is_valid_coloring(a).valid);
    }
  }
}

TEST(KempeSwap, LineSwapTwiceRestores) {
  const int m = 6;
  const auto a = canonical_assignment(m);
  const auto l0 = KempeSupport::line(m, 0);
  const auto once = kempe_swap(a, 0, 1, l0);
  EXPECT_NE(once, a);
  EXPECT_EQ(kempe_swap(once, 0, 1, l0), a);
}

TEST(KempeSwap, PlaneSwapTwiceRestores) {
  std::mt19937 rng(kSwapSeed + 1);
  for (int m = 4; m <= 9; ++m) {
    const auto a = odd_closed_form(m);
    for (int t = 0; t < m; ++t) {
      const Color r = static_cast<Color>(rng() % 3);
      const Color s = (r + 1) % 3;
      const auto p = KempeSupport::plane(m, t);
      EXPECT_EQ(kempe_swap(kempe_swap(a, r, s, p), r, s, p), a);
    }
  }
}

TEST(KempeSwap, RejectsUnclosedSupport) {
  const int m = 5;
  KempeSupport x(m);
  x.insert(Vertex(0, 0, 0, m).index());
  EXPECT_THROW((void)kempe_swap(canonical_assignment(m), 0, 1, x), SupportNotClosed);
  EXPECT_THROW((void)kempe_swap(canonical_assignment(m), 2, 2, KempeSupport(m)), TorusError);
}

TEST(KempeSwap, ThirdColorIsUntouched) {
  const int m = 6;
  const auto a = canonical_assignment(m);
  const auto b = kempe_swap(a, 0, 1, KempeSupport::plane(m, 2));
  EXPECT_EQ(color_map(a, 2), color_map(b, 2));
}

TEST(SignProduct, Examples) {
  EXPECT_EQ(sign_product(canonical_assignment(4)), 1);
  EXPECT_EQ(sign_product(m4_assignment()), -1);
}

TEST(SignProduct, AgreesWithOracle) {
  for (int m = 3; m <= 7; ++m) {
    EXPECT_EQ(sign_product(canonical_assignment(m)), oracle_sign_product(canonical_assignment(m)));
    EXPECT_EQ(sign_product(odd_closed_form(m)), oracle_sign_product(odd_closed_form(m)));
  }
}

TEST(SignProduct, InvariantUnderRandomSwapsAtSix) {
  const int m = 6;
  std::mt19937 rng(kSwapSeed);
  auto a = canonical_assignment(m);
  for (int n = 0; n < 20; ++n) {
    const Color r = static_cast<Color>(rng() % 3);
    const Color s = (r + 1 + static_cast<Color>(rng() % 2)) % 3;
    a = kempe_swap(a, r, s, random_cycle_union(kempe_map(a, r, s), m, rng));
    ASSERT_EQ(sign_product(a), 1);
  }
}

TEST(SignProduct, InvariantUnderRandomCycleUnions) {
  std::mt19937 rng(kSwapSeed);
  for (int m = 4; m <= 9; ++m) {
    auto a = odd_closed_form(m);
    const int start = sign_product(a);
    for (int n = 0; n < 15; ++n) {
      const Color r = static_cast<Color>(rng() % 3);
      const Color s = (r + 1 + static_cast<Color>(rng() % 2)) % 3;
      a = kempe_swap(a, r, s, random_cycle_union(kempe_map(a, r, s), m, rng));
      ASSERT_TRUE(is_valid_coloring(a).valid);
      ASSERT_EQ(sign_product(a), start);
      ASSERT_EQ(oracle_sign_product(a), start);
    }
  }
}

TEST(ParityBarrier, EvenModuliAreObstructed) {
  for (int m : {4, 6}) {
    const auto r = parity_barrier_report(m);
    EXPECT_TRUE(r.obstruction);
    EXPECT_EQ(r.canonical_product, 1);
    EXPECT_EQ(r.hamilton_product, -1);
    EXPECT_EQ(r.verdict, "unreachable by Kempe swaps from canonical");
  }
}

TEST(ParityBarrier, OddModulusHasNoObstruction) {
  const int m = 5;
  const auto r = parity_barrier_report(m);
  EXPECT_FALSE(r.obstruction);
  EXPECT_EQ(r.verdict, "no parity obstruction");
  // Cycles of odd length are even permutations.
  EXPECT_EQ(r.canonical_product, oracle_sign_product(canonical_assignment(m)));
  EXPECT_EQ(r.canonical_product, 1);
  EXPECT_EQ(r.hamilton_product, oracle_sign_product(odd_closed_form(m)));
  EXPECT_EQ(r.hamilton_product, 1);
}
