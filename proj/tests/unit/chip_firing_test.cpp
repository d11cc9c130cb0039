#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scree/chip_firing.hpp"
#include "scree/error.hpp"
#include "scree/families.hpp"
#include "scree/io.hpp"

namespace {

using namespace scree;

Divisor random_effective(oracle::Rng& rng, std::size_t n, int degree) {
  Divisor d(n);
  for (int i = 0; i < degree; ++i) d[oracle::uniform(rng, 0, static_cast<int>(n) - 1)] += 1;
  return d;
}

Divisor random_divisor(oracle::Rng& rng, std::size_t n, int spread) {
  Divisor d(n);
  for (std::size_t v = 0; v < n; ++v) d[static_cast<int>(v)] = oracle::uniform(rng, -spread, spread);
  return d;
}

Divisor named(const Multigraph& g, const std::vector<std::pair<std::string, int>>& chips) {
  Divisor d(g.num_vertices());
  for (const auto& [v, c] : chips) d[g.index_of(v)] = c;
  return d;
}

TEST(ChipFiring, FireSetConservesDegree) {
  oracle::Rng rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 8), 3, 0.4);
    auto d = random_divisor(rng, g.num_vertices(), 4);
    const auto mask = static_cast<std::uint32_t>(oracle::uniform(rng, 0, (1 << g.num_vertices()) - 1));
    auto fired = fire_set(g, d, VertexSet::from_mask(g.num_vertices(), mask));
    EXPECT_EQ(fired.degree(), d.degree());
    EXPECT_EQ(oracle::chips_of(fired), oracle::fire(g, oracle::chips_of(d), mask));
  }
}

TEST(ChipFiring, QReduceIsReducedEquivalentAndUnique) {
  oracle::Rng rng(43);
  for (int iter = 0; iter < 120; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 7), 3, 0.4);
    const int n = static_cast<int>(g.num_vertices());
    auto d = random_divisor(rng, g.num_vertices(), 3);
    const int q = oracle::uniform(rng, 0, n - 1);
    auto r = q_reduce(g, d, q);
    EXPECT_TRUE(oracle::q_reduced(g, oracle::chips_of(r.reduced), q));
    EXPECT_TRUE(is_q_reduced(g, r.reduced, q));
    EXPECT_EQ(apply_script(g, d, r.script), r.reduced);
    EXPECT_EQ(r.reduced.degree(), d.degree());
    EXPECT_TRUE(are_equivalent(g, d, r.reduced));
    // Any other representative reduces to the same divisor.
    auto moved = fire_set(g, d, VertexSet::from_mask(g.num_vertices(), static_cast<std::uint32_t>(oracle::uniform(rng, 1, (1 << n) - 1))));
    EXPECT_EQ(q_reduce(g, moved, q).reduced, r.reduced);
  }
}

TEST(ChipFiring, ReducedMembersOfClassAreUnique) {
  oracle::Rng rng(45);
  for (int iter = 0; iter < 40; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 6), 2, 0.4);
    const int n = static_cast<int>(g.num_vertices());
    auto d = random_effective(rng, g.num_vertices(), oracle::uniform(rng, 1, 4));
    const int q = oracle::uniform(rng, 0, n - 1);
    auto cls = oracle::effective_class(g, oracle::chips_of(d));
    int reduced = 0;
    for (const auto& e : cls) reduced += oracle::q_reduced(g, e, q) ? 1 : 0;
    EXPECT_EQ(reduced, 1);
    auto lib = effective_class(g, d);
    EXPECT_EQ(lib.size(), cls.size());
    for (const auto& e : lib) EXPECT_TRUE(cls.count(oracle::chips_of(e)));
  }
}

TEST(ChipFiring, PositiveRankMatchesClassOracle) {
  oracle::Rng rng(47);
  for (int iter = 0; iter < 120; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 6), 3, 0.4);
    auto d = random_effective(rng, g.num_vertices(), oracle::uniform(rng, 1, 4));
    EXPECT_EQ(has_positive_rank(g, d), oracle::positive_rank(g, oracle::chips_of(d)));
  }
}

TEST(ChipFiring, GonalityMatchesBruteForce) {
  oracle::Rng rng(49);
  for (int iter = 0; iter < 40; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 6), 3, 0.4);
    auto expected = oracle::gonality(g, 4);
    auto got = gonality_up_to(g, 4);
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (got) {
      EXPECT_EQ(got->value, *expected);
      EXPECT_TRUE(oracle::positive_rank(g, oracle::chips_of(got->witness)));
      EXPECT_EQ(got->witness.degree(), got->value);
    }
  }
}

TEST(ChipFiring, GonalityOfSmallFamilies) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(gonality(families::complete(n), n).value, n - 1);
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(gonality(families::cycle(n), 3).value, 2);
  EXPECT_EQ(gonality(families::path(6), 2).value, 1);
  EXPECT_EQ(gonality(families::banana_triangle(), 3).value, 3);
  EXPECT_EQ(gonality(families::petersen(), 4).value, 4);
  EXPECT_FALSE(gonality_up_to(families::complete(5), 3).has_value());
  EXPECT_THROW(gonality(families::complete(5), 3), Error);
  EXPECT_THROW(gonality(families::petersen(), 4, 5), Error);
}

TEST(ChipFiring, ScriptsAgreeBetweenEliminationAndReduction) {
  oracle::Rng rng(51);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 8), 3, 0.4);
    const int n = static_cast<int>(g.num_vertices());
    auto d = random_divisor(rng, g.num_vertices(), 3);
    FiringScript f;
    for (int v = 0; v < n; ++v) f.times_fired.push_back(oracle::uniform(rng, 0, 3));
    auto e = apply_script(g, d, f);
    auto a = firing_script_between(g, d, e);
    auto b = firing_script_by_reduction(g, d, e);
    f.normalize();
    EXPECT_EQ(a.times_fired, f.times_fired);
    EXPECT_EQ(b.times_fired, f.times_fired);
  }
  auto g = families::cycle(4);
  EXPECT_THROW(firing_script_between(g, Divisor::single(4, 0, 1), Divisor::single(4, 2, 1)), Error);
}

TEST(ChipFiring, LevelSetsAreNestedAndStayEffective) {
  oracle::Rng rng(53);
  for (int iter = 0; iter < 60; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 6), 2, 0.4);
    auto d = random_effective(rng, g.num_vertices(), oracle::uniform(rng, 1, 4));
    auto cls = effective_class(g, d);
    const auto& to = cls[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<int>(cls.size()) - 1))];
    auto chain = level_set_decomposition(g, d, to);
    EXPECT_EQ(chain.sets.size(), static_cast<std::size_t>(chain.script.max()));
    EXPECT_EQ(chain.intermediates.front(), d);
    EXPECT_EQ(chain.intermediates.back(), to);
    for (std::size_t i = 0; i < chain.sets.size(); ++i) {
      if (i > 0) EXPECT_TRUE(chain.sets[i - 1].is_subset_of(chain.sets[i]));
      EXPECT_TRUE(chain.intermediates[i + 1].is_effective());
      EXPECT_EQ(fire_set(g, chain.intermediates[i], chain.sets[i]), chain.intermediates[i + 1]);
    }
  }
}

TEST(ChipFiring, PartitionTestsAgreeWithOracle) {
  oracle::Rng rng(55);
  int partitioning = 0;
  for (int iter = 0; iter < 150; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 6), 2, 0.3);
    auto d = random_effective(rng, g.num_vertices(), oracle::uniform(rng, 1, 3));
    const bool expected = oracle::partitions(g, oracle::chips_of(d));
    EXPECT_EQ(partitions_vertices(g, d).partitions, expected);
    auto by_reduction = partition_class_by_reduction(g, d);
    EXPECT_EQ(by_reduction.has_value(), expected);
    if (expected) {
      ++partitioning;
      EXPECT_EQ(by_reduction->size(), partitions_vertices(g, d).members.size());
    }
  }
  EXPECT_GT(partitioning, 10);
}

TEST(ChipFiring, DecompositionFromPartitioningDivisor) {
  auto g = families::cycle(5);
  auto r = decomposition_from_partitioning_divisor(g, Divisor::single(5, 0, 2));
  EXPECT_EQ(r.decomposition.width().width, 2);
  for (int a : r.decomposition.link_adhesion_sizes()) EXPECT_EQ(a, 2);
  for (int a : r.decomposition.node_adhesion_sizes()) EXPECT_EQ(a, 0);
  EXPECT_THROW(decomposition_from_partitioning_divisor(g, Divisor::single(5, 0, 1)), Error);
  auto k4 = decomposition_from_partitioning_divisor(families::complete(4), Divisor::single(4, 0, 3));
  EXPECT_EQ(k4.decomposition.num_nodes(), 2);
}

TEST(ChipFiring, MaximalLegalFiringIsLegalAndMaximal) {
  oracle::Rng rng(57);
  for (int iter = 0; iter < 80; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 7), 3, 0.4);
    const int n = static_cast<int>(g.num_vertices());
    auto d = random_effective(rng, g.num_vertices(), oracle::uniform(rng, 1, 6));
    auto allowed = g.all_vertices();
    allowed.erase(oracle::uniform(rng, 0, n - 1));
    auto s = maximal_legal_firing(g, d, allowed);
    EXPECT_TRUE(s.is_subset_of(allowed));
    if (!s.empty()) EXPECT_TRUE(fire_set(g, d, s).is_effective());
    // Legal sets are closed under union, so every legal subset lies inside s.
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
      auto t = VertexSet::from_mask(g.num_vertices(), m);
      if (!t.is_subset_of(allowed)) continue;
      auto next = oracle::fire(g, oracle::chips_of(d), m);
      bool legal = true;
      for (int v : t.members()) legal = legal && next[static_cast<std::size_t>(v)] >= 0;
      if (legal) EXPECT_TRUE(t.is_subset_of(s));
    }
  }
}

TEST(ChipFiring, DharGuidedDecompositionOnKnownGraphs) {
  auto s = families::sierpinski(2);
  auto d = named(s, families::sierpinski_chips());
  EXPECT_EQ(d.degree(), 6);
  auto a = dhar_guided_decomposition(s, d, DharStrategy::kMinMoves);
  EXPECT_EQ(a.width, 6);
  EXPECT_EQ(a.trace.size(), 2U);

  auto g = families::dhar_choice_graph();
  auto c = named(g, families::dhar_choice_chips());
  EXPECT_EQ(c.degree(), 4);
  auto naive = dhar_guided_decomposition(g, c, DharStrategy::kMinMoves);
  EXPECT_EQ(naive.width, 6);
  EXPECT_EQ(naive.decomposition.width().link_width, 6);
  auto dhar = dhar_guided_decomposition(g, c, DharStrategy::kDharMaximal);
  EXPECT_EQ(dhar.width, 4);
  EXPECT_THROW(dhar_guided_decomposition(g, Divisor::single(g.num_vertices(), 0, 1), DharStrategy::kMinMoves), Error);
}

TEST(ChipFiring, DharGuidedWidthIsValidOnRandomGraphs) {
  oracle::Rng rng(59);
  int built = 0;
  for (int iter = 0; iter < 60 && built < 20; ++iter) {
    auto g = oracle::random_connected(rng, oracle::uniform(rng, 2, 6), 2, 0.4);
    auto gon = gonality(g, 6);
    for (auto strategy : {DharStrategy::kMinMoves, DharStrategy::kDharMaximal}) {
      auto r = dhar_guided_decomposition(g, gon.witness, strategy);
      EXPECT_EQ(r.width, r.decomposition.width().width);
      EXPECT_EQ(r.width, oracle::width_of(r.decomposition).width);
      ++built;
    }
  }
}

TEST(ChipFiring, DivisorJson) {
  auto g = families::cycle(4);
  auto d = Divisor::single(4, 2, 3);
  EXPECT_EQ(io::divisor_from_json(io::divisor_to_json(g, d), g), d);
}

}  // namespace
