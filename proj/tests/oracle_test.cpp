#include "cacti/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "cacti/formulas.hpp"

namespace cacti {
namespace {

Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidParameter;
}

PlantedCactus leaf(int color) { return PlantedCactus{color, {}}; }

RootedCactus single_polygon(int m) {
  RootedCactus rooted;
  for (int i = 1; i <= m; ++i) rooted.corners.push_back(leaf(i));
  return rooted;
}

/// Two triangles sharing their color-1 vertex.
RootedCactus two_triangles() {
  RootedCactus rooted = single_polygon(3);
  rooted.corners[0].polygons.push_back({leaf(2), leaf(3)});
  return rooted;
}

TEST(GenerateRooted, Examples) {
  EXPECT_EQ(generate_rooted(2, 3).size(), 5u);
  EXPECT_EQ(generate_rooted(3, 1).size(), 1u);
  EXPECT_EQ(generate_rooted(3, 4).size(), 55u);
  EXPECT_EQ(error_code([] { generate_rooted(2, 9); }), Errc::BudgetExceeded);
  EXPECT_EQ(error_code([] { generate_rooted(3, 0); }), Errc::NonPositiveP);
}

TEST(GenerateRooted, MatchesRootedCountWithinBudget) {
  for (int m = 2; m <= 5; ++m) {
    for (std::int64_t p = 1; p <= std::min<std::int64_t>(oracle_budget(m), 5); ++p) {
      const auto rooted = generate_rooted(m, p);
      EXPECT_EQ(ExactInteger(rooted.size()), count_rooted(size_statistic(m, p))) << m << " " << p;
      for (const auto& r : rooted) ASSERT_EQ(r.polygon_count(), p);
    }
  }
}

TEST(GenerateRooted, DeterministicAndSortedWithoutDuplicates) {
  const auto first = generate_rooted(3, 4);
  EXPECT_EQ(first, generate_rooted(3, 4));
  std::vector<std::string> keys;
  for (const auto& r : first) keys.push_back(encode(r));
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(std::set<std::string>(keys.begin(), keys.end()).size(), keys.size());
}

TEST(ToGraph, Examples) {
  const auto polygon = to_graph(single_polygon(4));
  EXPECT_EQ(polygon.vertex_count(), 4);
  EXPECT_EQ(polygon.polygon_count(), 1);

  const auto g = to_graph(two_triangles());
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.polygon_count(), 2);
  const int shared = g.polygon_vertices[0][0];
  EXPECT_EQ(g.vertex_color[shared], 1);
  EXPECT_EQ(g.incident[shared].size(), 2u);
  EXPECT_EQ(g.polygon_vertices[1][0], shared);
  EXPECT_EQ(to_text(two_triangles()), "(1[(2,3)],2,3)");
}

TEST(ToGraph, RerootingAtTheRootRoundTrips) {
  for (int m = 2; m <= 4; ++m) {
    for (std::int64_t p = 1; p <= std::min<std::int64_t>(oracle_budget(m), 4); ++p) {
      for (const auto& rooted : generate_rooted(m, p)) {
        const auto g = to_graph(rooted);
        ASSERT_EQ(reroot(g, 0), rooted) << to_text(rooted);
        for (int polygon = 0; polygon < g.polygon_count(); ++polygon) {
          for (int i = 0; i < m; ++i) ASSERT_EQ(g.vertex_color[g.polygon_vertices[polygon][i]], i + 1);
        }
      }
    }
  }
}

TEST(CanonicalUnrooted, Examples) {
  const auto g = to_graph(two_triangles());
  EXPECT_EQ(canonical_unrooted(to_graph(reroot(g, 0))), canonical_unrooted(to_graph(reroot(g, 1))));

  // The two generated paths differ in the color of the middle vertex; each
  // gives the same key whichever edge is the root.
  const auto paths = generate_rooted(2, 2);
  ASSERT_EQ(paths.size(), 2u);
  for (const auto& path : paths) {
    const auto pg = to_graph(path);
    EXPECT_EQ(canonical_unrooted(to_graph(reroot(pg, 0))), canonical_unrooted(to_graph(reroot(pg, 1))));
  }
  EXPECT_NE(canonical_unrooted(to_graph(paths[0])), canonical_unrooted(to_graph(paths[1])));

  RootedCactus at_color_2 = single_polygon(3);
  at_color_2.corners[1].polygons.push_back({leaf(3), leaf(1)});
  EXPECT_NE(canonical_unrooted(g), canonical_unrooted(to_graph(at_color_2)));
}

TEST(CanonicalUnrooted, InvariantUnderEveryRerooting) {
  for (const auto& rooted : generate_rooted(3, 4)) {
    const auto g = to_graph(rooted);
    const auto key = canonical_unrooted(g);
    for (int polygon = 0; polygon < g.polygon_count(); ++polygon) {
      ASSERT_EQ(canonical_unrooted(to_graph(reroot(g, polygon))), key);
    }
  }
}

TEST(EnumerateUnlabelled, Examples) {
  const auto pairs = enumerate_unlabelled(3, 2);
  ASSERT_EQ(pairs.size(), 3u);
  for (const auto& cls : pairs) EXPECT_EQ(cls.stats.aut_order, 2);

  const auto single = enumerate_unlabelled(2, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].stats.aut_order, 1);

  std::map<std::int64_t, int> by_aut;
  for (const auto& cls : enumerate_unlabelled(3, 4)) ++by_aut[cls.stats.aut_order];
  EXPECT_EQ(by_aut, (std::map<std::int64_t, int>{{1, 10}, {2, 6}, {4, 3}}));
}

TEST(EnumerateUnlabelled, RootingsTimesAutOrderIsP) {
  for (int m = 2; m <= 4; ++m) {
    for (std::int64_t p = 1; p <= std::min<std::int64_t>(oracle_budget(m), 5); ++p) {
      std::int64_t rooted = 0;
      for (const auto& cls : enumerate_unlabelled(m, p)) {
        ASSERT_EQ(cls.rootings * cls.stats.aut_order, p);
        rooted += cls.rootings;
      }
      EXPECT_EQ(ExactInteger(rooted), count_rooted(size_statistic(m, p)));
    }
  }
}

TEST(EnumerateUnlabelled, StatsAreCoherent) {
  for (const auto& cls : enumerate_unlabelled(3, 5)) {
    EXPECT_EQ(color_marginal(cls.stats.degrees), cls.stats.colors);
    EXPECT_EQ(validate(cls.stats.colors).p(), 5);
    EXPECT_EQ(degree_statistic(cls.stats.degrees).p(), 5);
  }
}

TEST(EnumerateUnlabelled, RealizedStatisticsAreExactlyTheValidOnes) {
  // A statistic validates iff some cactus realizes it.
  for (int m = 2; m <= 3; ++m) {
    for (std::int64_t p = 1; p <= 4; ++p) {
      std::set<ColorDistribution> colors;
      std::set<DegreeMatrix> degrees;
      for (const auto& cls : enumerate_unlabelled(m, p)) {
        colors.insert(cls.stats.colors);
        degrees.insert(cls.stats.degrees);
      }
      std::set<ColorDistribution> valid_colors;
      for (const auto& stat : all_color_statistics(m, p)) valid_colors.insert(stat.colors());
      EXPECT_EQ(colors, valid_colors) << m << " " << p;
      if (p <= 3) {
        std::set<DegreeMatrix> valid_degrees;
        for (const auto& stat : all_degree_statistics(m, p)) valid_degrees.insert(stat.degrees());
        EXPECT_EQ(degrees, valid_degrees) << m << " " << p;
      }
    }
  }
}

TEST(CountPointedOrbits, Examples) {
  const auto g = to_graph(two_triangles());
  EXPECT_EQ(count_pointed_orbits(g, 1), 1);
  EXPECT_EQ(count_pointed_orbits(g, 2), 1);
  const auto polygon = to_graph(single_polygon(5));
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(count_pointed_orbits(polygon, i), 1);
  EXPECT_EQ(error_code([&] { count_pointed_orbits(g, 4); }), Errc::ColorOutOfRange);
}

TEST(Factorizations, Examples) {
  using Key = CycleTypeTuple;
  const std::map<Key, std::int64_t> p3 = {
      {Key{{{1, 3}}, {{3, 1}}}, 1},
      {Key{{{3, 1}}, {{1, 3}}}, 1},
      {Key{{{1, 1}, {2, 1}}, {{1, 1}, {2, 1}}}, 3},
      // g_1 = g_2 = (1 3 2): both 3-cycles. Incoherent, since 1 + 1 != 4 vertices.
      {Key{{{3, 1}}, {{3, 1}}}, 1},
  };
  EXPECT_EQ(factorizations(2, 3), p3);
  EXPECT_EQ(factorizations(2, 1), (std::map<Key, std::int64_t>{{Key{{{1, 1}}, {{1, 1}}}, 1}}));
  EXPECT_EQ(error_code([] { factorizations(3, 7); }), Errc::BudgetExceeded);
}

TEST(Factorizations, CoherentKeysMatchRootedDegreeCounts) {
  for (int m = 2; m <= 3; ++m) {
    for (std::int64_t p = 1; p <= 4; ++p) {
      std::int64_t tuples = 0;
      for (const auto& [key, count] : factorizations(m, p)) {
        tuples += count;
        std::int64_t vertices = 0;
        for (const auto& row : key) {
          for (const auto& [j, mult] : row) vertices += mult;
        }
        if (vertices != vertex_count(m, p)) {
          EXPECT_LT(vertices, vertex_count(m, p));
          continue;
        }
        EXPECT_EQ(count_rooted(degree_statistic(DegreeMatrix(key))), count) << m << " " << p;
      }
      // Every choice of g_1..g_{m-1} determines g_m.
      EXPECT_EQ(ExactInteger(tuples), pow_int(static_cast<std::int64_t>(factorial(p)), m - 1));
    }
  }
}

TEST(FreeLabelledBruteforce, Examples) {
  EXPECT_EQ(free_labelled_bruteforce({2, {2, 2}}), 4);
  EXPECT_EQ(free_labelled_bruteforce({2, {1, 1}}), 1);
  EXPECT_EQ(free_labelled_bruteforce({3, {2, 2, 3}}), 24);
  EXPECT_EQ(error_code([] { free_labelled_bruteforce({3, {3, 3, 3}}); }), Errc::BudgetExceeded);
}

TEST(FreeLabelledBruteforce, MatchesFormula) {
  for (int m = 2; m <= 3; ++m) {
    for (std::int64_t p = 1; p <= 4; ++p) {
      for (const auto& stat : all_color_statistics(m, p)) {
        std::int64_t pool = 1;
        for (auto c : stat.colors().counts) pool *= c;
        if (pool > 16) continue;
        EXPECT_EQ(free_labelled_bruteforce(stat.colors()), count_free_labelled(stat.colors())) << describe(stat);
      }
    }
  }
}

TEST(EnumerateGonal, Examples) {
  EXPECT_EQ(enumerate_gonal(3, 4), 7);
  EXPECT_EQ(enumerate_gonal(2, 1), 1);
  EXPECT_EQ(enumerate_gonal(2, 6), 14);
}

TEST(EnumerateGonal, MatchesFormulaWithinBudget) {
  for (int m = 2; m <= 5; ++m) {
    for (std::int64_t p = 1; p <= std::min<std::int64_t>(oracle_budget(m), 5); ++p) {
      EXPECT_EQ(enumerate_gonal(m, p), count_gonal(m, p, GonalKind::Unlabelled)) << m << " " << p;
    }
  }
}

TEST(ConstellationCensus, MatchesFormula) {
  EXPECT_EQ(constellation_census(2, 1), 1);
  EXPECT_EQ(constellation_census(2, 2), 3);
  for (int m = 2; m <= 3; ++m) {
    for (std::int64_t p = 1; p <= (m == 2 ? 4 : 3); ++p) {
      EXPECT_EQ(constellation_census(m, p), count_constellation_rooted(m, p)) << m << " " << p;
    }
  }
}

TEST(Verify, Examples) {
  for (auto [m, p] : {std::pair{3, 4}, std::pair{2, 6}, std::pair{4, 3}}) {
    const auto report = verify(m, p);
    EXPECT_TRUE(report.passed()) << report.first_failure()->name << ": " << *report.first_failure()->counterexample;
    for (const auto& check : report.checks) EXPECT_GT(check.comparisons, 0) << check.name;
  }
  EXPECT_EQ(error_code([] { verify(2, 99); }), Errc::BudgetExceeded);
}

}  // namespace
}  // namespace cacti
