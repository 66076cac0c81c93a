#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetpart/error.hpp"
#include "posetpart/relation.hpp"

using namespace posetpart;

TEST(ElementSet, BasicOperations) {
  ElementSet s = ElementSet::singleton(3);
  s.insert(0);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.min(), 0u);
  EXPECT_EQ(s.to_vector(), (std::vector<std::size_t>{0, 3}));
  EXPECT_TRUE(s.is_subset_of(ElementSet::all(4)));
  EXPECT_EQ(ElementSet::all(64).size(), 64u);
  s.erase(0);
  EXPECT_EQ(s, ElementSet::singleton(3));
}

TEST(Relation, RejectsMoreThan64Points) {
  EXPECT_THROW(Relation(65), Error);
  EXPECT_NO_THROW(Relation(64));
}

TEST(Relation, FromPairsChecksRange) {
  try {
    Relation::from_pairs(2, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_mismatch);
  }
}

TEST(TransitiveClosure, AddsCompositePair) {
  Relation r = Relation::from_pairs(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(transitive_closure(r), Relation::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(TransitiveClosure, LeavesTransitiveRelationUnchanged) {
  Relation r = Relation::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}, {2, 2}});
  EXPECT_EQ(transitive_closure(r), r);
}

TEST(TransitiveClosure, ClosesTwoCycleWithLoops) {
  Relation r = Relation::from_pairs(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(transitive_closure(r), Relation::full(2));
}

TEST(TransitiveClosure, MatchesPathSearchOnRandomRelations) {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 7;
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 4 == 0) r.set(i, j);
    const Relation closed = transitive_closure(r);
    EXPECT_TRUE(is_transitive(closed));
    EXPECT_TRUE(r.is_subset_of(closed));
    EXPECT_EQ(transitive_closure(closed), closed);
    // (i, j) is in the closure iff j is reachable from i in one or more steps.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> reached(n, false);
      std::vector<std::size_t> stack;
      for (std::size_t j = 0; j < n; ++j)
        if (r(i, j)) reached[j] = true, stack.push_back(j);
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
          if (r(u, v) && !reached[v]) reached[v] = true, stack.push_back(v);
      }
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(closed(i, j), reached[j]);
    }
  }
}

TEST(IsPartialOrder, Examples) {
  EXPECT_TRUE(is_partial_order(Relation::identity(3)));
  Relation two_cycle = Relation::identity(2);
  two_cycle.set(0, 1);
  two_cycle.set(1, 0);
  EXPECT_FALSE(is_partial_order(two_cycle));
  EXPECT_FALSE(is_partial_order(Relation::from_pairs(2, {{0, 1}})));
}

TEST(TransitiveReduction, OfChainIsSuccessorPairs) {
  Relation chain = reflexive_transitive_closure(Relation::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(transitive_reduction(chain), Relation::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST(RelationOrdering, RowMajorWithFirstCellMostSignificant) {
  Relation a = Relation::from_pairs(2, {{1, 1}});
  Relation b = Relation::from_pairs(2, {{0, 1}});
  Relation c = Relation::from_pairs(2, {{0, 0}});
  EXPECT_LT(Relation(2), a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(ClosedExtensions, QuasiordersOfEmptyBaseMatchRawCount) {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t seen = 0;
    std::optional<Relation> previous;
    for_each_closed_extension(Relation(n), ExtensionKind::quasiorder, [&](const Relation& r) {
      EXPECT_TRUE(is_reflexive(r));
      EXPECT_TRUE(is_transitive(r));
      if (previous) {
        EXPECT_LT(*previous, r);
      }
      previous = r;
      ++seen;
    });
    EXPECT_EQ(seen, oracle::count_quasiorders_raw(n)) << n;
  }
}

TEST(ClosedExtensions, PartialOrdersMatchRawSearch) {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<Relation> found;
    for_each_closed_extension(Relation(n), ExtensionKind::partial_order,
                              [&](const Relation& r) { found.push_back(r); });
    std::vector<Relation> expected;
    for (const auto& m : oracle::all_partial_orders_raw(n)) expected.push_back(oracle::from_matrix(m));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(found, expected) << n;
  }
}

TEST(ClosedExtensions, RespectsBaseAndClosesNonTransitiveBase) {
  // Base 0->1, 1->2 is not transitive; every extension must contain 0->2.
  const Relation base = Relation::from_pairs(3, {{0, 1}, {1, 2}});
  std::size_t seen = 0;
  for_each_closed_extension(base, ExtensionKind::partial_order, [&](const Relation& r) {
    EXPECT_TRUE(r(0, 2));
    ++seen;
  });
  EXPECT_EQ(seen, 1u);
}

TEST(ClosedExtensions, CyclicBaseHasNoPartialOrderExtension) {
  const Relation base = Relation::from_pairs(2, {{0, 1}, {1, 0}});
  std::size_t seen = 0;
  for_each_closed_extension(base, ExtensionKind::partial_order, [&](const Relation&) { ++seen; });
  EXPECT_EQ(seen, 0u);
  for_each_closed_extension(base, ExtensionKind::quasiorder, [&](const Relation&) { ++seen; });
  EXPECT_EQ(seen, 1u);
}
