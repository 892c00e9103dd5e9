#pragma once

// Closed-form counts of m-ary cacti at the three statistic levels.
//
// Every formula below is a divisor sum whose individual terms need not be
// integral; sums are accumulated as exact rationals and converted with
// to_integer(), which throws std::logic_error if the result is fractional.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/statistics.hpp"

namespace cacti {

enum class AutMode { Exactly, AtLeast };
enum class GonalKind { Labelled, Unlabelled, Pointed, Rooted, Planted };

namespace detail {

/// Weight applied to a divisor d in the correction sums; returning 0 drops d.
using DivisorWeight = std::function<std::int64_t(std::int64_t)>;

inline DivisorWeight phi_weight(std::int64_t min_d = 1) {
  return [min_d](std::int64_t d) -> std::int64_t { return d < min_d ? 0 : totient(d); };
}

inline DivisorWeight mu_weight(std::int64_t min_d = 1) {
  return [min_d](std::int64_t d) -> std::int64_t { return d < min_d ? 0 : mobius(d); };
}

/// Weight for automorphism strata: only multiples of s, weighted by mu(d/s)
/// (order exactly s) or phi(d/s) (order a multiple of s).
inline DivisorWeight aut_weight(std::int64_t s, AutMode mode) {
  return [s, mode](std::int64_t d) -> std::int64_t {
    if (d % s != 0) return 0;
    return mode == AutMode::Exactly ? mobius(d / s) : totient(d / s);
  };
}

inline ExactInteger multinomial_row(std::int64_t n, const DegreeMatrix::Row& row,
                                    std::int64_t divisor = 1) {
  std::vector<std::int64_t> parts;
  parts.reserve(row.size());
  for (const auto& [degree, mult] : row) parts.push_back(mult / divisor);
  return multinomial(n / divisor, parts);
}

// Color level, pointed at color index i (0-based):
//   sum_d w(d) C(p/d, (n_i-1)/d) prod_{j != i} C(p/d, n_j/d)
// over d dividing p and every component of n - e_i.
inline ExactInteger color_pointed_sum(const Statistic& stat, int i, const DivisorWeight& weight) {
  const auto& counts = stat.colors().counts;
  const auto p = stat.p();
  std::vector<std::int64_t> values{p};
  for (int j = 0; j < stat.m(); ++j) values.push_back(j == i ? counts[j] - 1 : counts[j]);
  ExactInteger sum = 0;
  for (auto d : common_divisors(values)) {
    const auto w = weight(d);
    if (w == 0) continue;
    ExactInteger term = binomial(p / d, (counts[i] - 1) / d);
    for (int j = 0; j < stat.m(); ++j) {
      if (j != i) term *= binomial(p / d, counts[j] / d);
    }
    sum += w * term;
  }
  return sum;
}

// Degree level, pointed at color index i (0-based):
//   sum_{h,d} w(d) multinomial((n_i-1)/d; (row_i - e_h)/d) prod_{l != i} multinomial(n_l/d; row_l/d)
// over h with n_ih != 0 and d dividing h, p and every entry of N - E_ih.
inline ExactInteger degree_pointed_sum(const Statistic& stat, int i, const DivisorWeight& weight) {
  const auto& matrix = stat.degrees();
  const int m = stat.m();
  std::vector<std::int64_t> n(m);
  for (int l = 0; l < m; ++l) n[l] = matrix.color_count(l + 1);

  ExactInteger sum = 0;
  for (const auto& [h, mult] : matrix.rows()[i]) {
    DegreeMatrix::Row reduced = matrix.rows()[i];
    if (--reduced[h] == 0) reduced.erase(h);

    std::vector<std::int64_t> values{h, stat.p()};
    for (const auto& [degree, k] : reduced) values.push_back(k);
    for (int l = 0; l < m; ++l) {
      if (l == i) continue;
      for (const auto& [degree, k] : matrix.rows()[l]) values.push_back(k);
    }
    for (auto d : common_divisors(values)) {
      const auto w = weight(d);
      if (w == 0) continue;
      ExactInteger term = multinomial_row(n[i] - 1, reduced, d);
      for (int l = 0; l < m; ++l) {
        if (l != i) term *= multinomial_row(n[l], matrix.rows()[l], d);
      }
      sum += w * term;
    }
  }
  return sum;
}

inline ExactRational degree_prefactor(const Statistic& stat, int i) {
  ExactInteger denominator = 1;
  for (int l = 1; l <= stat.m(); ++l) {
    if (l != i + 1) denominator *= stat.degrees().color_count(l);
  }
  return ExactRational(pow_int(stat.p(), stat.m() - 2), denominator);
}

// The shared shape of the unlabelled, asymmetric and automorphism-stratum
// counts at color/degree level: sum over colors i of the pointed-style
// divisor sum with the appropriate prefactor and weight.
inline ExactRational pointed_correction(const Statistic& stat, const DivisorWeight& weight) {
  const auto p = stat.p();
  ExactRational total = 0;
  for (int i = 0; i < stat.m(); ++i) {
    if (stat.level() == Level::Color) {
      const auto factor = p - stat.colors().counts[i] + 1;
      total += ExactRational(factor * color_pointed_sum(stat, i, weight), ExactInteger(p) * p);
    } else {
      total += degree_prefactor(stat, i) * degree_pointed_sum(stat, i, weight);
    }
  }
  return total;
}

inline ExactInteger rooted_numerator_degree(const Statistic& stat) {
  ExactInteger product = 1;
  for (int i = 1; i <= stat.m(); ++i) {
    product *= multinomial_row(stat.degrees().color_count(i), stat.degrees().row(i));
  }
  return product;
}

inline ExactInteger color_product(const Statistic& stat) {
  ExactInteger product = 1;
  for (auto c : stat.colors().counts) product *= binomial(stat.p(), c);
  return product;
}

inline ExactInteger n_product(const Statistic& stat) {
  ExactInteger product = 1;
  for (int i = 1; i <= stat.m(); ++i) {
    product *= stat.level() == Level::Color ? stat.colors().count(i) : stat.degrees().color_count(i);
  }
  return product;
}

inline ExactInteger n_factorials(const Statistic& stat) {
  ExactInteger product = 1;
  for (int i = 1; i <= stat.m(); ++i) {
    product *= factorial(stat.level() == Level::Color ? stat.colors().count(i)
                                                      : stat.degrees().color_count(i));
  }
  return product;
}

/// Size-level unlabelled-style sum: (1/p) (C(mp,p)/n + sum_{d|p, d<p} w(p/d) C(md, d)).
inline ExactInteger size_unlabelled_like(const Statistic& stat, const DivisorWeight& weight) {
  const std::int64_t m = stat.m(), p = stat.p();
  ExactRational total(binomial(m * p, p), stat.n());
  for (auto d : divisors(p)) {
    if (d < p) total += weight(p / d) * binomial(m * d, d);
  }
  return to_integer(total / p, "size-level unlabelled count");
}

/// Zero-dimensional (single-vertex) statistics: true when color `color` is
/// the color carried by the lone vertex.
inline bool single_vertex_has_color(const Statistic& stat, int color) {
  switch (stat.level()) {
    case Level::Size: return true;
    case Level::Color: return stat.colors().count(color) == 1;
    case Level::Degree: return stat.degrees().color_count(color) == 1;
  }
  return false;
}

}  // namespace detail

/// Unlabelled rooted (at a polygon) cacti. Zero for the single vertex.
inline ExactInteger count_rooted(const Statistic& stat) {
  const auto p = stat.p();
  if (p == 0) return 0;
  switch (stat.level()) {
    case Level::Size:
      return exact_div(binomial(stat.m() * p, p), stat.n(), "rooted count");
    case Level::Color:
      return exact_div(detail::color_product(stat), p, "rooted count");
    case Level::Degree:
      return exact_div(pow_int(p, stat.m() - 1) * detail::rooted_numerator_degree(stat),
                       detail::n_product(stat), "rooted count");
  }
  return 0;
}

/// Labelled cacti (vertices of each color labelled 1..n_i, or 1..n at size level).
inline ExactInteger count_labelled(const Statistic& stat) {
  const std::int64_t m = stat.m(), p = stat.p();
  if (p == 0) return 1;
  switch (stat.level()) {
    case Level::Size:
      return exact_div(factorial(stat.n() - 1) * binomial(m * p, p), p, "labelled count");
    case Level::Color: {
      ExactInteger result = pow_int(p, m - 2);
      for (auto c : stat.colors().counts) result *= rising_factorial(p - c + 1, c - 1);
      return result;
    }
    case Level::Degree: {
      ExactInteger result = pow_int(p, m - 2);
      for (int i = 1; i <= m; ++i) {
        const auto ni = stat.degrees().color_count(i);
        result *= factorial(ni - 1) * detail::multinomial_row(ni, stat.degrees().row(i));
      }
      return result;
    }
  }
  return 0;
}

/// Unlabelled cacti pointed at a vertex. At size level the color must be
/// absent and the count covers all colors; otherwise a color in 1..m is
/// required.
inline ExactInteger count_pointed(const Statistic& stat, std::optional<int> color = std::nullopt) {
  const std::int64_t m = stat.m(), p = stat.p();
  if (stat.level() == Level::Size) {
    if (color) throw Error(Errc::ColorForbidden, "size-level pointed counts take no color");
    if (p == 0) return 1;
    ExactInteger sum = 0;
    for (auto d : divisors(p)) sum += totient(d) * binomial(p * m / d, p / d);
    return exact_div(sum, p, "pointed count");
  }
  if (!color) throw Error(Errc::ColorRequired, "pointed counts by color/degree need a color");
  if (*color < 1 || *color > m) {
    throw Error(Errc::ColorOutOfRange, "color " + std::to_string(*color) + " not in 1.." +
                                           std::to_string(m));
  }
  if (p == 0) return detail::single_vertex_has_color(stat, *color) ? 1 : 0;
  if (*color != 1) return count_pointed(shift(stat, *color - 1), 1);

  if (stat.level() == Level::Color) {
    const auto n1 = stat.colors().counts[0];
    return to_integer(ExactRational((p - n1 + 1) * detail::color_pointed_sum(stat, 0, detail::phi_weight()),
                                    ExactInteger(p) * p),
                      "pointed count");
  }
  return to_integer(detail::degree_prefactor(stat, 0) *
                        detail::degree_pointed_sum(stat, 0, detail::phi_weight()),
                    "pointed count");
}

namespace detail {

inline ExactInteger unlabelled_like(const Statistic& stat, const DivisorWeight& weight) {
  if (stat.p() == 0) return 1;
  const auto p = stat.p();
  switch (stat.level()) {
    case Level::Size:
      return size_unlabelled_like(stat, weight);
    case Level::Color: {
      ExactRational total(color_product(stat), ExactInteger(p) * p);
      total += pointed_correction(stat, weight);
      return to_integer(total, "color-level unlabelled count");
    }
    case Level::Degree: {
      ExactRational total(pow_int(p, stat.m() - 2) * rooted_numerator_degree(stat), n_product(stat));
      total += pointed_correction(stat, weight);
      return to_integer(total, "degree-level unlabelled count");
    }
  }
  return 0;
}

}  // namespace detail

/// Unlabelled (unrooted) cacti; 1 for the single vertex.
inline ExactInteger count_unlabelled(const Statistic& stat) {
  return detail::unlabelled_like(stat, detail::phi_weight(2));
}

/// Unlabelled cacti with trivial automorphism group; 1 for the single vertex.
inline ExactInteger count_asymmetric(const Statistic& stat) {
  return detail::unlabelled_like(stat, detail::mu_weight(2));
}

/// Unlabelled cacti whose automorphism group has order exactly s, or a
/// multiple of s. Zero unless s divides p.
inline ExactInteger count_aut(const Statistic& stat, std::int64_t s, AutMode mode) {
  if (s < 2) throw Error(Errc::STooSmall, "automorphism order must be at least 2");
  const std::int64_t m = stat.m(), p = stat.p();
  if (p == 0 || p % s != 0) return 0;
  if (stat.level() == Level::Size) {
    ExactInteger sum = 0;
    for (auto d : divisors(p / s)) {
      const std::int64_t w = mode == AutMode::Exactly ? mobius(d) : totient(d);
      sum += w * binomial(p * m / (s * d), p / (s * d));
    }
    return to_integer(ExactRational(s * sum, p), "automorphism stratum");
  }
  return to_integer(s * detail::pointed_correction(stat, detail::aut_weight(s, mode)),
                    "automorphism stratum");
}

/// Sum over unlabelled cacti with degree distribution N of 1/|Aut|.
inline ExactRational aut_reciprocal_sum(const DegreeMatrix& matrix) {
  const auto stat = validate(matrix);
  if (stat.p() == 0) return 1;
  return ExactRational(count_rooted(stat), stat.p());
}

/// Plane m-gonal cacti without vertex colors.
inline ExactInteger count_gonal(int m, std::int64_t p, GonalKind kind) {
  detail::require_m(m);
  if (p < 0) throw Error(Errc::InvalidParameter, "polygon count must be nonnegative");
  if (p == 0) return kind == GonalKind::Rooted ? 0 : 1;
  const auto n = vertex_count(m, p);
  const ExactInteger mp = ExactInteger(m) * p;

  const auto planted = [&] { return exact_div(binomial(m * p, p), n, "planted gonal count"); };
  const auto pointed = [&] {
    ExactInteger sum = 0;
    for (auto d : divisors(p)) sum += totient(p / d) * binomial(d * m, d);
    return exact_div(sum, mp, "pointed gonal count");
  };
  const auto rooted = [&] {
    ExactInteger sum = 0;
    for (auto d : common_divisors({m, p - 1})) sum += totient(d) * binomial(p * m / d, (p - 1) / d);
    return exact_div(sum, mp, "rooted gonal count");
  };

  switch (kind) {
    case GonalKind::Labelled:
      return exact_div(factorial(n - 1) * binomial(m * p, p), mp, "labelled gonal count");
    case GonalKind::Pointed: return pointed();
    case GonalKind::Rooted: return rooted();
    case GonalKind::Planted: return planted();
    case GonalKind::Unlabelled: return pointed() + rooted() - planted();
  }
  return 0;
}

/// Labelled free (non-plane) m-ary cacti with the given color distribution.
inline ExactInteger count_free_labelled(const ColorDistribution& colors) {
  const auto stat = validate(colors);
  const auto p = stat.p();
  if (p == 0) return 1;
  ExactRational result = pow_int(p, stat.m() - 2);
  for (auto c : colors.counts) {
    result *= ExactRational(factorial(c - 1) * pow_int(c, p - c), factorial(p - c));
  }
  return to_integer(result, "free labelled count");
}

/// Rooted m-ary constellations with p polygons.
inline ExactInteger count_constellation_rooted(int m, std::int64_t p) {
  detail::require_m(m);
  if (p < 1) throw Error(Errc::NonPositiveP, "constellations need at least one polygon");
  const ExactInteger numerator = (m + 1) * pow_int(m, p - 1) * binomial(m * p, p);
  const ExactInteger denominator = ExactInteger((m - 1) * p + 2) * ((m - 1) * p + 1);
  return exact_div(numerator, denominator, "constellation count");
}

}  // namespace cacti
