#pragma once

// Exact integer/rational arithmetic and the small number-theoretic helpers
// used by every counting formula.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cacti/error.hpp"

namespace cacti {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// C(n, k), with the convention C(n, k) = 0 whenever k < 0, k > n or n < 0.
inline ExactInteger binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInteger result = 1;
  // After step i the accumulator equals C(n - k + i, i), so every division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline ExactInteger factorial(std::int64_t n) {
  if (n < 0) throw Error(Errc::NonPositive, "factorial of negative number");
  ExactInteger result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

/// n! / prod(parts_i!). Requires every part nonnegative and sum(parts) == n.
inline ExactInteger multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto part : parts) {
    if (part < 0) throw Error(Errc::InvalidParameter, "multinomial part is negative");
    sum += part;
  }
  if (sum != n) {
    throw Error(Errc::SumMismatch,
                "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
  }
  ExactInteger result = 1;
  std::int64_t running = 0;
  for (auto part : parts) {
    running += part;
    result *= binomial(running, part);
  }
  return result;
}

inline ExactInteger multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts) {
  return multinomial(n, std::span<const std::int64_t>(parts.begin(), parts.size()));
}

/// x (x+1) ... (x+k-1); 1 for k == 0.
inline ExactInteger rising_factorial(std::int64_t x, std::int64_t k) {
  if (k < 0) throw Error(Errc::NegativeLength, "rising factorial of negative length");
  ExactInteger result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= x + i;
  return result;
}

namespace detail {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

inline std::vector<PrimePower> factorize(std::int64_t n) {
  std::vector<PrimePower> factors;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    factors.push_back({q, e});
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

inline void require_positive(std::int64_t d, const char* what) {
  if (d < 1) throw Error(Errc::NonPositive, std::string(what) + " requires a positive argument");
}

}  // namespace detail

inline std::int64_t totient(std::int64_t d) {
  detail::require_positive(d, "euler_phi");
  std::int64_t result = d;
  for (const auto& f : detail::factorize(d)) result = result / f.prime * (f.prime - 1);
  return result;
}

inline int mobius(std::int64_t d) {
  detail::require_positive(d, "moebius_mu");
  const auto factors = detail::factorize(d);
  for (const auto& f : factors) {
    if (f.exponent > 1) return 0;
  }
  return factors.size() % 2 == 0 ? 1 : -1;
}

inline ExactInteger euler_phi(std::int64_t d) { return totient(d); }
inline ExactInteger moebius_mu(std::int64_t d) { return mobius(d); }

/// Positive divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  detail::require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Divisors of the gcd of the given values; zeros are divisible by everything.
inline std::vector<std::int64_t> common_divisors(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) throw Error(Errc::AllZero, "common divisors of an all-zero list");
  return divisors(g);
}

inline std::vector<std::int64_t> common_divisors(std::initializer_list<std::int64_t> values) {
  return common_divisors(std::span<const std::int64_t>(values.begin(), values.size()));
}

/// Converts a rational known to be integral. A fractional value here means a
/// formula was implemented wrongly, so it is reported as a logic error.
inline ExactInteger to_integer(const ExactRational& q, const char* context = "count") {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error(std::string(context) + " is not integral: " + q.str());
  }
  return boost::multiprecision::numerator(q);
}

inline ExactInteger exact_div(const ExactInteger& a, const ExactInteger& b,
                              const char* context = "division") {
  ExactInteger q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error(std::string(context) + " is not exact");
  return q;
}

inline ExactInteger pow_int(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw Error(Errc::InvalidParameter, "negative exponent");
  return boost::multiprecision::pow(ExactInteger(base), static_cast<unsigned>(exponent));
}

inline std::string to_decimal(const ExactInteger& value) { return value.str(); }

}  // namespace cacti
