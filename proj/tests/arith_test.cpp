#include "cacti/arith.hpp"

#include <numeric>
#include <vector>

#include <gtest/gtest.h>

namespace cacti {
namespace {

// Pascal's triangle, built by addition only.
std::vector<std::vector<ExactInteger>> pascal(int rows) {
  std::vector<std::vector<ExactInteger>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(12, 4), 495);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  const auto t = pascal(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), t[n][k]) << n << " " << k;
  }
}

TEST(Binomial, Symmetry) {
  for (int n = 0; n <= 80; ++n) {
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), binomial(n, n - k));
  }
}

TEST(Binomial, BeyondSixtyFourBits) {
  // C(100, 50) = 100891344545564193334812497256
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial(5, {2, 2, 1}), 30);
  EXPECT_EQ(multinomial(7, {7}), 1);
  try {
    multinomial(4, {2, 1});
    FAIL() << "expected SumMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SumMismatch);
  }
  EXPECT_THROW(multinomial(1, {2, -1}), Error);
}

TEST(Multinomial, TimesPartFactorialsIsNFactorial) {
  std::vector<std::int64_t> parts;
  auto rec = [&](auto&& self, std::int64_t remaining) -> void {
    if (remaining == 0) {
      const std::int64_t n = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
      ExactInteger product = multinomial(n, parts);
      for (auto part : parts) product *= factorial(part);
      ASSERT_EQ(product, factorial(n));
      return;
    }
    for (std::int64_t part = 0; part <= remaining && parts.size() < 5; ++part) {
      parts.push_back(part);
      self(self, remaining - part);
      parts.pop_back();
    }
  };
  for (std::int64_t n = 0; n <= 9; ++n) rec(rec, n);
}

TEST(RisingFactorial, Examples) {
  EXPECT_EQ(rising_factorial(2, 3), 24);
  EXPECT_EQ(rising_factorial(17, 0), 1);
  EXPECT_EQ(rising_factorial(1, 4), 24);
  EXPECT_EQ(rising_factorial(-2, 3), 0);
  try {
    rising_factorial(3, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeLength);
  }
}

TEST(EulerPhi, ExamplesAndBruteForce) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(4), 2);
  EXPECT_EQ(euler_phi(12), 4);
  for (std::int64_t d = 1; d <= 300; ++d) {
    std::int64_t coprime = 0;
    for (std::int64_t k = 1; k <= d; ++k) coprime += std::gcd(k, d) == 1;
    ASSERT_EQ(totient(d), coprime) << d;
  }
  EXPECT_THROW(euler_phi(0), Error);
}

TEST(MoebiusMu, Examples) {
  EXPECT_EQ(moebius_mu(1), 1);
  EXPECT_EQ(moebius_mu(4), 0);
  EXPECT_EQ(moebius_mu(6), 1);
  EXPECT_EQ(moebius_mu(30), -1);
  try {
    moebius_mu(-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonPositive);
  }
}

TEST(DivisorSums, PhiSumsToNAndMuSumsToZero) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    std::int64_t phi_sum = 0, mu_sum = 0;
    for (auto d : divisors(n)) {
      phi_sum += totient(d);
      mu_sum += mobius(d);
    }
    ASSERT_EQ(phi_sum, n);
    ASSERT_EQ(mu_sum, n == 1 ? 1 : 0) << n;
  }
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(divisors(7), (std::vector<std::int64_t>{1, 7}));
  EXPECT_EQ(divisors(36), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_THROW(divisors(0), Error);
}

TEST(CommonDivisors, Examples) {
  EXPECT_EQ(common_divisors({4, 0, 2, 2}), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(common_divisors({1, 9}), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(common_divisors({6, 4}), (std::vector<std::int64_t>{1, 2}));
  try {
    common_divisors({0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AllZero);
  }
}

TEST(ToInteger, RejectsFractions) {
  EXPECT_EQ(to_integer(ExactRational(10, 5)), 2);
  EXPECT_THROW(to_integer(ExactRational(1, 3)), std::logic_error);
  EXPECT_THROW(exact_div(7, 2), std::logic_error);
}

}  // namespace
}  // namespace cacti
