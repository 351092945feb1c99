#include <random>

#include <gtest/gtest.h>

#include "argroth/colimit.hpp"
#include "oracle.hpp"

using namespace argroth;

namespace {

const FPAbelianGroup real_node(2, IntMatrix{{-2, 2}});
const FPAbelianGroup complex_node(3, IntMatrix{{-1, 1, 1}});
const IntMatrix node_eta{{1, 0}, {0, 1}, {0, 1}};

} // namespace

TEST(Colimit, SingleObject) {
  const auto c = colimit(GroupDiagram::chain({real_node}, {}));
  EXPECT_EQ(invariants(c.group), invariants(real_node));
  ASSERT_EQ(c.canonical.size(), 1u);
  EXPECT_TRUE(is_isomorphism(c.canonical[0]));
}

TEST(Colimit, IsomorphismArrowGivesFinalObject) {
  const FPAbelianGroup z2(2);
  const IntMatrix swap{{0, 1}, {1, 0}};
  const auto c = colimit(GroupDiagram::chain({z2, z2}, {swap}));
  EXPECT_EQ(invariants(c.group), invariants(z2));
}

TEST(Colimit, NodeChain) {
  const auto c = colimit(GroupDiagram::chain({real_node, complex_node}, {node_eta}));
  const auto inv = invariants(c.group);
  EXPECT_EQ(inv.free_rank, 2u);
  EXPECT_TRUE(inv.torsion.empty());
  // The canonical map from the last object of a chain is an isomorphism.
  EXPECT_TRUE(is_isomorphism(c.canonical[1]));
  for (const auto &h : c.canonical)
    EXPECT_TRUE(is_well_defined(h));
}

TEST(Colimit, RejectsInconsistentDiagram) {
  const auto z = FPAbelianGroup::free_group(1);
  GroupDiagram d{{z, z, z}, {}};
  d.arrows.push_back({0, 1, {z, z, IntMatrix{{2}}}});
  d.arrows.push_back({1, 2, {z, z, IntMatrix{{3}}}});
  d.arrows.push_back({0, 2, {z, z, IntMatrix{{5}}}});
  EXPECT_TRUE(d.defect().has_value());
  EXPECT_THROW(colimit(d), InvariantError);

  d.arrows.back().hom.matrix = IntMatrix{{6}};
  EXPECT_FALSE(d.defect().has_value());
  EXPECT_NO_THROW(colimit(d));
}

TEST(Colimit, RejectsBackwardArrow) {
  const auto z = FPAbelianGroup::free_group(1);
  GroupDiagram d{{z, z}, {{1, 0, GroupHom::identity(z)}}};
  EXPECT_THROW(colimit(d), InvariantError);
}

TEST(Colimit, RejectsIllDefinedArrow) {
  const auto d =
      GroupDiagram::chain({real_node, complex_node}, {IntMatrix{{1, 0}, {0, 1}, {0, 0}}});
  EXPECT_THROW(colimit(d), InvariantError);
}

TEST(Colimit, ChainOfUnimodularArrowsKeepsInvariants) {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3;
    const FPAbelianGroup g0(n, oracle::random_matrix(rng, 2, n, -5, 5));
    std::vector<FPAbelianGroup> objects{g0};
    std::vector<IntMatrix> steps;
    for (int stage = 0; stage < 3; ++stage) {
      // Random elementary unimodular change of generators.
      IntMatrix u = IntMatrix::identity(n);
      u(stage % n, (stage + 1) % n) = trial % 5 - 2;
      u(2, 0) = 1;
      // Next object carries the pushed-forward relations, so u is an
      // isomorphism onto it.
      const FPAbelianGroup next(
          n, objects.back().relations * u.transpose());
      steps.push_back(u);
      objects.push_back(next);
    }
    const auto c = colimit(GroupDiagram::chain(objects, steps));
    const auto expected = invariants(g0);
    EXPECT_EQ(invariants(c.group), expected);
    for (const auto &g : objects)
      EXPECT_EQ(invariants(g), expected);
  }
}
