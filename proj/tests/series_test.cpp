#include "cacti/series.hpp"

#include <functional>

#include <gtest/gtest.h>

#include "cacti/formulas.hpp"
#include "support/checks.hpp"

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

std::vector<std::vector<ExactInteger>> geometric(int m, int length) {
  return std::vector<std::vector<ExactInteger>>(m, geometric_coefficients(length));
}

TEST(Monomial, OrderedByDegreeFirst) {
  EXPECT_LT((Monomial{3, 0}), (Monomial{0, 4}));
  EXPECT_LT((Monomial{2, 0}), (Monomial{1, 1}));
  EXPECT_EQ((Monomial{1, 2} * Monomial{3, 0}), (Monomial{4, 2}));
  EXPECT_EQ((Monomial{1, 2}.power(3)), (Monomial{3, 6}));
  EXPECT_EQ(format_monomial(Monomial{5, 6}, 2), "x_1^5x_2^6");
  EXPECT_EQ(format_monomial(Monomial{9}, 1), "x^9");
  EXPECT_EQ(format_monomial(Monomial{}, 3), "1");
}

TEST(TruncatedSeries, ArithmeticRespectsTheBound) {
  const auto x = IntegerSeries::variable(1, 5, 0);
  const auto inverse = inverse_one_minus(x);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(inverse.coefficient(Monomial{k}), 1);
  EXPECT_EQ(inverse.coefficient(Monomial{6}), 0);
  const auto square = inverse * inverse;
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(square.coefficient(Monomial{k}), k + 1);
  for (const auto& [mono, c] : square.terms()) {
    EXPECT_LE(mono.degree(), 5);
    EXPECT_NE(c, 0);
  }
  EXPECT_TRUE((inverse - inverse).empty());
  EXPECT_THROW(inverse_one_minus(IntegerSeries::constant(1, 3, 1)), std::logic_error);
}

TEST(TruncatedSeries, LogOfGeometric) {
  // log 1/(1 - x) = sum x^k / k.
  const auto log = log_one_over_one_minus(to_rational(IntegerSeries::variable(1, 8, 0)));
  EXPECT_EQ(log.coefficient(Monomial{0}), 0);
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(log.coefficient(Monomial{k}), ExactRational(1, k));
}

TEST(TruncatedSeries, UnlabelledCyclesOfASingleVariable) {
  // sum_d phi(d)/d log 1/(1 - x^d) = x/(1 - x): one necklace of each length.
  const auto cycles = unlabelled_cycles(to_rational(IntegerSeries::variable(1, 10, 0)));
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(cycles.coefficient(Monomial{k}), 1) << k;
}

TEST(SolvePlanted, Examples) {
  const auto family = solve_planted(2, 12);
  EXPECT_EQ(family.planted(1).coefficient(Monomial{1, 0}), 1);
  EXPECT_EQ(series_rooted(family).coefficient(Monomial{3, 3}), 20);

  const auto weighted = solve_planted_weighted(3, 3);
  const auto triangle = series_rooted(weighted).coefficient(Monomial{1, 1, 1});
  EXPECT_EQ(triangle, MarkerPolynomial::marker(1, 1) * MarkerPolynomial::marker(2, 1) *
                          MarkerPolynomial::marker(3, 1));
}

TEST(SolvePlanted, Errors) {
  EXPECT_EQ(error_code([] { solve_planted(1, 4); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code([] { solve_planted(3, 0); }), Errc::InvalidParameter);
}

TEST(SolvePlanted, ResidualVanishes) {
  for (int m = 2; m <= 4; ++m) {
    const int order = 10;
    const auto family = solve_planted(m, order);
    for (int i = 0; i < m; ++i) {
      auto others = IntegerSeries::constant(m, order, 1);
      for (int j = 0; j < m; ++j) {
        if (j != i) others = others * family.series[j];
      }
      const auto rhs = inverse_one_minus(others).times_variable(i);
      EXPECT_TRUE((family.series[i] - rhs).empty()) << "m=" << m << " i=" << i;
    }
  }
}

TEST(SolvePlanted, WeightedCollapsesToUnweighted) {
  for (int m = 2; m <= 3; ++m) {
    const int order = m == 2 ? 9 : 8;
    const auto weighted = solve_planted_weighted(m, order);
    const auto plain = solve_planted(m, order);
    for (int i = 0; i < m; ++i) {
      const auto collapsed =
          weighted.series[i].map_coefficients([](const MarkerPolynomial& c) { return c.evaluate_at_one(); });
      EXPECT_EQ(collapsed, plain.series[i]) << "m=" << m << " i=" << i;
    }
  }
}

TEST(SolvePlanted, WeightedRootedMatchesDegreeFormula) {
  for (int m = 2; m <= 3; ++m) {
    const std::int64_t p_max = m == 2 ? 7 : 4;
    const auto rooted = series_rooted(solve_planted_weighted(m, vertex_count(m, p_max)));
    for (std::int64_t p = 1; p <= p_max; ++p) {
      for (const auto& stat : all_degree_statistics(m, p)) {
        const auto colors = color_marginal(stat.degrees());
        const std::vector<int> e(colors.counts.begin(), colors.counts.end());
        const auto poly = rooted.coefficient(e);
        EXPECT_EQ(poly.coefficient(to_marker_monomial(stat.degrees())), count_rooted(stat)) << describe(stat);
      }
    }
  }
}

TEST(SolvePlanted, WeightedMonomialsAreCoherent) {
  const int m = 3;
  const auto rooted = series_rooted(solve_planted_weighted(m, 9));
  for (const auto& [mono, poly] : rooted.terms()) {
    for (const auto& [markers, c] : poly.terms()) {
      const auto matrix = to_degree_matrix(m, markers);
      const auto stat = degree_statistic(matrix);
      const auto colors = color_marginal(matrix);
      EXPECT_EQ(Monomial(std::vector<int>(colors.counts.begin(), colors.counts.end())), mono);
      EXPECT_EQ(c, count_rooted(stat));
    }
  }
}

TEST(SeriesRooted, Examples) {
  EXPECT_EQ(series_rooted(solve_planted(2, 11)).coefficient(Monomial{5, 6}), 5292);
  const auto three = series_rooted(solve_planted(3, 13));
  EXPECT_EQ(three.coefficient(Monomial{1, 1, 1}), 1);
  EXPECT_EQ(three.coefficient(Monomial{4, 4, 5}), 225);
}

TEST(SeriesRooted, CollapseIsOneSortPower) {
  for (int m = 2; m <= 4; ++m) {
    const int order = 10;
    const auto a = solve_one_sort(m, order);
    auto power = IntegerSeries::constant(1, order, 1);
    for (int k = 0; k < m; ++k) power = power * a;
    EXPECT_EQ(series_rooted(solve_planted(m, order)).collapse(), power) << m;
  }
}

TEST(SeriesPointedUnlabelled, Examples) {
  const auto two = solve_planted(2, 6);
  EXPECT_EQ(series_pointed_unlabelled(two, 1, 6).coefficient(Monomial{1, 0}), 1);
  EXPECT_EQ(series_pointed_unlabelled(two, 1, 6).coefficient(Monomial{2, 2}), 2);
  const auto three = solve_planted(3, 5);
  EXPECT_EQ(series_pointed_unlabelled(three, 2, 5).coefficient(Monomial{1, 2, 2}), 1);
}

TEST(SeriesPointedUnlabelled, Errors) {
  const auto family = solve_planted(2, 4);
  EXPECT_EQ(error_code([&] { series_pointed_unlabelled(family, 3, 4); }), Errc::ColorOutOfRange);
  EXPECT_EQ(error_code([&] { series_pointed_unlabelled(family, 1, 5); }), Errc::InvalidParameter);
}

TEST(SeriesUnlabelled, Examples) {
  EXPECT_EQ(series_unlabelled_one_sort(3, 9).coefficient(Monomial{9}), 19);
  EXPECT_EQ(series_unlabelled_one_sort(2, 7).coefficient(Monomial{7}), 28);
  EXPECT_EQ(series_unlabelled_one_sort(4, 4).coefficient(Monomial{1}), 1);
  EXPECT_EQ(series_unlabelled(3, 13).coefficient(Monomial{4, 4, 5}), 39);
}

TEST(SeriesUnlabelled, OneSortMatchesFormula) {
  for (int m = 2; m <= 6; ++m) {
    const std::int64_t p_max = 10;
    const auto series = series_unlabelled_one_sort(m, static_cast<int>(vertex_count(m, p_max)));
    for (std::int64_t p = 0; p <= p_max; ++p) {
      EXPECT_EQ(series.coefficient(Monomial{static_cast<int>(vertex_count(m, p))}),
                count_unlabelled(size_statistic(m, p)))
          << "m=" << m << " p=" << p;
    }
  }
}

TEST(SeriesUnlabelled, OneSortIsCollapsedMultivariateAwayFromOneVertex) {
  for (int m = 2; m <= 3; ++m) {
    const int order = 9;
    auto collapsed = series_unlabelled(m, order).collapse();
    // The multivariate series counts the lone vertex once per color.
    collapsed.add_term(Monomial{1}, -(m - 1));
    EXPECT_EQ(collapsed, series_unlabelled_one_sort(m, order)) << m;
  }
}

TEST(SolveOneSort, Examples) {
  const auto two = solve_one_sort(2, 7);
  EXPECT_EQ(two.coefficient(Monomial{7}), 132);
  const auto three = solve_one_sort(3, 9);
  EXPECT_EQ(three.coefficient(Monomial{9}), 55);
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(solve_one_sort(m, 3).coefficient(Monomial{1}), 1);
}

TEST(SolveOneSort, SupportIsCongruentToOne) {
  for (int m = 2; m <= 5; ++m) {
    for (const auto& [mono, c] : solve_one_sort(m, 25).terms()) EXPECT_EQ((mono[0] - 1) % (m - 1), 0);
  }
}

TEST(ChottinExtract, Examples) {
  EXPECT_EQ(chottin_extract(geometric(2, 12), {1, 1}, {5, 6}), 5292);
  EXPECT_EQ(chottin_extract(geometric(3, 14), {1, 1, 1}, {4, 4, 5}), 225);
  EXPECT_EQ(chottin_extract(geometric(3, 8), {3, 2, 4}, {3, 2, 4}), 1);
  EXPECT_EQ(error_code([] { chottin_extract(geometric(3, 4), {0, 0, 0}, {1, 1, 1}); }),
            Errc::CoherenceViolation);
  EXPECT_EQ(error_code([] { chottin_extract(geometric(2, 4), {3, 0}, {2, 2}); }), Errc::CoherenceViolation);
  EXPECT_EQ(error_code([] { chottin_extract(geometric(2, 4), {0, 0}, {0, 2}); }), Errc::InvalidParameter);
}

TEST(ChottinExtract, AllOnesAlphaHasProductPrefactor) {
  // alpha = (1, ..., 1): the count is p^{m-1} / prod n_i times a product of binomials.
  for (int m = 2; m <= 4; ++m) {
    for (std::int64_t p = 1; p <= 5; ++p) {
      for (const auto& stat : all_color_statistics(m, p)) {
        const auto& ns = stat.colors().counts;
        ExactRational expected = ExactRational(pow_int(p, m - 1));
        for (auto n_i : ns) {
          // [s^{p - n_i}] (1 - s)^{-n_i}
          expected *= ExactRational(binomial(p - 1, p - n_i), n_i);
        }
        EXPECT_EQ(chottin_extract(geometric(m, static_cast<int>(p) + 1), std::vector<std::int64_t>(m, 1), ns),
                  to_integer(expected))
            << describe(stat);
      }
    }
  }
}

TEST(ChottinExtract, SeriesInAHatThroughPlantedSeries) {
  // [x^a] 1/(1 - Ahat_1) = [x^{a + e_1}] A_1, expanded as sum_k [x^a] Ahat_1^k.
  for (int m = 2; m <= 3; ++m) {
    const int order = 9;
    const auto family = solve_planted(m, order);
    testing::for_each_exponent(m, order - 1, [&](const std::vector<int>& a) {
      for (int v : a) {
        if (v < 1) return;
      }
      const int total = std::accumulate(a.begin(), a.end(), 0);
      if (total % (m - 1) != 0) return;
      std::vector<std::int64_t> ns(a.begin(), a.end());
      ExactInteger sum = 0;
      for (std::int64_t k = 1; k <= total; ++k) {
        std::vector<std::int64_t> alphas(m, k);
        alphas[0] = 0;
        bool fits = true;
        for (int i = 1; i < m; ++i) fits = fits && alphas[i] <= ns[i];
        if (!fits || (total - (m - 1) * k) % (m - 1) != 0) continue;
        sum += chottin_extract(geometric(m, order + 1), alphas, ns);
      }
      auto shifted = a;
      ++shifted[0];
      EXPECT_EQ(sum, family.series[0].coefficient(shifted));
    });
  }
}

TEST(Agreement, SeriesMatchFormulasToDegreeTen) {
  for (int m = 2; m <= 4; ++m) {
    const auto failure = testing::check_series_agreement(m, 10);
    EXPECT_FALSE(failure.has_value()) << *failure;
  }
}

TEST(Agreement, ChottinMatchesDirectExtraction) {
  for (int m = 2; m <= 3; ++m) {
    const auto failure = testing::check_chottin_agreement(m, 10);
    EXPECT_FALSE(failure.has_value()) << *failure;
  }
}

}  // namespace
}  // namespace cacti
