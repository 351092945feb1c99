#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "argroth/abelian_group.hpp"
#include "oracle.hpp"

using namespace argroth;

TEST(Invariants, FreeGroup) {
  const auto inv = invariants(FPAbelianGroup::free_group(1));
  EXPECT_EQ(inv.free_rank, 1u);
  EXPECT_TRUE(inv.torsion.empty());
  EXPECT_EQ(to_string(inv), "Z^1");
}

TEST(Invariants, RealNodePresentation) {
  const FPAbelianGroup g(2, IntMatrix{{-2, 2}});
  const auto inv = invariants(g);
  EXPECT_EQ(inv.free_rank, 1u);
  EXPECT_EQ(inv.torsion, std::vector<Integer>{2});
  EXPECT_EQ(to_string(inv), "Z^1 (+) Z/2");
  EXPECT_EQ(rational_rank(g), 1u);
}

TEST(Invariants, ComplexNodePresentation) {
  const FPAbelianGroup g(3, IntMatrix{{-1, 1, 1}});
  const auto inv = invariants(g);
  EXPECT_EQ(inv.free_rank, 2u);
  EXPECT_TRUE(inv.torsion.empty());
  EXPECT_EQ(rational_rank(g), 2u);
}

TEST(Invariants, DropsUnitFactorsAndOrdersTorsion) {
  // Z/6 (+) Z/4 is Z/2 (+) Z/12 in invariant-factor form.
  const FPAbelianGroup g(2, IntMatrix{{6, 0}, {0, 4}});
  const auto inv = invariants(g);
  EXPECT_EQ(inv.free_rank, 0u);
  EXPECT_EQ(inv.torsion, (std::vector<Integer>{2, 12}));
  EXPECT_EQ(to_string(inv), "Z^0 (+) Z/2 (+) Z/12");
}

TEST(Invariants, ZeroGroup) {
  const FPAbelianGroup empty;
  EXPECT_TRUE(invariants(empty).is_trivial());
  EXPECT_EQ(rational_rank(empty), 0u);
  EXPECT_EQ(to_string(invariants(empty)), "Z^0");
  const FPAbelianGroup killed(2, IntMatrix{{1, 0}, {0, -1}});
  EXPECT_TRUE(invariants(killed).is_trivial());
}

TEST(Invariants, DimensionMismatch) {
  EXPECT_THROW(FPAbelianGroup(3, IntMatrix{{1, 2}}), std::invalid_argument);
  FPAbelianGroup g(2);
  g.relations = IntMatrix{{1, 2, 3}};
  EXPECT_THROW(invariants(g), std::invalid_argument);
  EXPECT_THROW(rational_rank(g), std::invalid_argument);
}

TEST(Invariants, DirectSumConcatenatesTorsion) {
  const auto g = direct_sum({FPAbelianGroup(2, IntMatrix{{-2, 2}}),
                             FPAbelianGroup(1, IntMatrix{{3}})});
  const auto inv = invariants(g);
  EXPECT_EQ(inv.free_rank, 1u);
  EXPECT_EQ(inv.torsion, std::vector<Integer>{6});
}

namespace {

FPAbelianGroup permute_generators(const FPAbelianGroup &g,
                                  const std::vector<std::size_t> &perm) {
  IntMatrix m(g.relations.rows(), g.n_generators);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, perm[j]) = g.relations(i, j);
  return FPAbelianGroup(g.n_generators, m);
}

FPAbelianGroup permute_relations(const FPAbelianGroup &g,
                                 const std::vector<std::size_t> &perm) {
  IntMatrix m(g.relations.rows(), g.n_generators);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(perm[i], j) = g.relations(i, j);
  return FPAbelianGroup(g.n_generators, m);
}

} // namespace

TEST(Invariants, PresentationInvariance) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const std::size_t k = size(rng) - 1;
    const FPAbelianGroup g(n, oracle::random_matrix(rng, k, n, -6, 6));
    const GroupInvariants base = invariants(g);

    std::vector<std::size_t> gp(n), rp(k);
    std::iota(gp.begin(), gp.end(), 0);
    std::iota(rp.begin(), rp.end(), 0);
    std::shuffle(gp.begin(), gp.end(), rng);
    std::shuffle(rp.begin(), rp.end(), rng);
    EXPECT_EQ(invariants(permute_generators(g, gp)), base);
    EXPECT_EQ(invariants(permute_relations(g, rp)), base);

    FPAbelianGroup negated = g;
    if (k > 0)
      negated.relations.negate_row(trial % k);
    EXPECT_EQ(invariants(negated), base);

    IntMatrix extra(1, n);
    for (std::size_t i = 0; i < k; ++i) {
      const int c = coeff(rng);
      for (std::size_t j = 0; j < n; ++j)
        extra(0, j) += c * g.relations(i, j);
    }
    EXPECT_EQ(invariants(FPAbelianGroup(n, g.relations.stacked(extra))), base);
  }
}
