#pragma once

// Truncated multivariate power series with exact coefficients, and the
// functional equations for planted, rooted, pointed and unrooted m-ary cacti
// solved in that ring. This is the second, independent route to the counts
// in formulas.hpp.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/error.hpp"
#include "cacti/statistics.hpp"

namespace cacti {

inline constexpr int kMaxVariables = 8;

/// Exponent vector over at most kMaxVariables variables, with its total
/// degree cached. Ordered by total degree first, so truncated products can
/// stop scanning early.
class Monomial {
 public:
  Monomial() = default;

  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  explicit Monomial(std::span<const int> exponents) {
    if (exponents.size() > kMaxVariables) {
      throw Error(Errc::InvalidParameter, "too many series variables");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0) throw Error(Errc::InvalidParameter, "negative exponent");
      exps_[i] = static_cast<std::uint16_t>(exponents[i]);
      degree_ += exponents[i];
    }
  }

  static Monomial unit(int index) {
    Monomial result;
    result.exps_.at(index) = 1;
    result.degree_ = 1;
    return result;
  }

  int operator[](int index) const { return exps_[index]; }
  int degree() const { return degree_; }

  Monomial operator*(const Monomial& other) const {
    Monomial result;
    for (int i = 0; i < kMaxVariables; ++i) result.exps_[i] = exps_[i] + other.exps_[i];
    result.degree_ = degree_ + other.degree_;
    return result;
  }

  Monomial power(int d) const {
    Monomial result;
    for (int i = 0; i < kMaxVariables; ++i) result.exps_[i] = exps_[i] * d;
    result.degree_ = degree_ * d;
    return result;
  }

  std::vector<int> exponents(int variables) const {
    return std::vector<int>(exps_.begin(), exps_.begin() + variables);
  }

  bool operator==(const Monomial&) const = default;

  bool operator<(const Monomial& other) const {
    if (degree_ != other.degree_) return degree_ < other.degree_;
    return exps_ > other.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  int degree_ = 0;
};

inline std::string format_monomial(const Monomial& mono, int variables) {
  std::string out;
  for (int i = 0; i < variables; ++i) {
    if (mono[i] == 0) continue;
    out += variables == 1 ? "x" : "x_" + std::to_string(i + 1);
    if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
  }
  return out.empty() ? "1" : out;
}

/// Marker r_{ij}: counts vertices of color i and degree j.
struct Marker {
  int color = 1;
  int degree = 1;
  auto operator<=>(const Marker&) const = default;
};

using MarkerMonomial = std::vector<std::pair<Marker, int>>;

/// Polynomial in the degree markers with exact integer coefficients.
class MarkerPolynomial {
 public:
  using Terms = std::map<MarkerMonomial, ExactInteger>;

  MarkerPolynomial() = default;
  MarkerPolynomial(int constant) : MarkerPolynomial(ExactInteger(constant)) {}
  MarkerPolynomial(const ExactInteger& constant) {
    if (constant != 0) terms_.emplace(MarkerMonomial{}, constant);
  }

  static MarkerPolynomial marker(int color, int degree) {
    MarkerPolynomial result;
    result.terms_.emplace(MarkerMonomial{{Marker{color, degree}, 1}}, 1);
    return result;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MarkerPolynomial& operator+=(const MarkerPolynomial& other) {
    for (const auto& [mono, c] : other.terms_) add(mono, c);
    return *this;
  }
  MarkerPolynomial& operator-=(const MarkerPolynomial& other) {
    for (const auto& [mono, c] : other.terms_) add(mono, -c);
    return *this;
  }
  friend MarkerPolynomial operator+(MarkerPolynomial a, const MarkerPolynomial& b) { return a += b; }
  friend MarkerPolynomial operator-(MarkerPolynomial a, const MarkerPolynomial& b) { return a -= b; }

  friend MarkerPolynomial operator*(const MarkerPolynomial& a, const MarkerPolynomial& b) {
    MarkerPolynomial result;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) result.add(multiply(ma, mb), ca * cb);
    }
    return result;
  }

  MarkerPolynomial& operator*=(const MarkerPolynomial& other) { return *this = *this * other; }

  bool operator==(const MarkerPolynomial&) const = default;

  ExactInteger evaluate_at_one() const {
    ExactInteger sum = 0;
    for (const auto& [mono, c] : terms_) sum += c;
    return sum;
  }

  ExactInteger coefficient(const MarkerMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? ExactInteger(0) : it->second;
  }

 private:
  static MarkerMonomial multiply(const MarkerMonomial& a, const MarkerMonomial& b) {
    MarkerMonomial out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        out.push_back(*ia++);
      } else if (ia == a.end() || ib->first < ia->first) {
        out.push_back(*ib++);
      } else {
        out.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  void add(const MarkerMonomial& mono, const ExactInteger& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Degree matrix encoded by a marker monomial r^N.
inline DegreeMatrix to_degree_matrix(int m, const MarkerMonomial& mono) {
  std::vector<DegreeMatrix::Row> rows(m);
  for (const auto& [marker, exponent] : mono) rows.at(marker.color - 1)[marker.degree] += exponent;
  return DegreeMatrix(std::move(rows));
}

inline MarkerMonomial to_marker_monomial(const DegreeMatrix& matrix) {
  MarkerMonomial mono;
  for (int i = 1; i <= matrix.m(); ++i) {
    for (const auto& [degree, mult] : matrix.row(i)) {
      mono.emplace_back(Marker{i, static_cast<int>(degree)}, static_cast<int>(mult));
    }
  }
  return mono;
}

inline bool is_zero(const ExactInteger& c) { return c == 0; }
inline bool is_zero(const ExactRational& c) { return c == 0; }
inline bool is_zero(const MarkerPolynomial& c) { return c.is_zero(); }

/// Multivariate power series truncated at total degree `bound`.
template <class Coeff>
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, Coeff>;

  TruncatedSeries(int variables, int bound) : variables_(variables), bound_(bound) {
    if (variables < 1 || variables > kMaxVariables) {
      throw Error(Errc::InvalidParameter, "series need 1.." + std::to_string(kMaxVariables) +
                                              " variables");
    }
    if (bound < 0) throw Error(Errc::InvalidParameter, "negative truncation order");
  }

  static TruncatedSeries constant(int variables, int bound, const Coeff& c) {
    TruncatedSeries s(variables, bound);
    s.add_term(Monomial{}, c);
    return s;
  }

  static TruncatedSeries variable(int variables, int bound, int index) {
    TruncatedSeries s(variables, bound);
    s.add_term(Monomial::unit(index), Coeff(1));
    return s;
  }

  int variables() const { return variables_; }
  int bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Coeff coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff coefficient(std::span<const int> exponents) const { return coefficient(Monomial(exponents)); }

  void add_term(const Monomial& mono, const Coeff& c) {
    if (mono.degree() > bound_ || is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    for (const auto& [mono, c] : other.terms_) add_term(mono, c);
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    for (const auto& [mono, c] : other.terms_) add_term(mono, Coeff(0) - c);
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries result(a.variables_, std::min(a.bound_, b.bound_));
    const int bound = result.bound_;
    for (const auto& [ma, ca] : a.terms_) {
      if (ma.degree() > bound) break;
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.degree() + mb.degree() > bound) break;
        result.accumulate(ma * mb, ca * cb);
      }
    }
    result.prune();
    return result;
  }

  TruncatedSeries scaled(const Coeff& factor) const {
    TruncatedSeries result(variables_, bound_);
    for (const auto& [mono, c] : terms_) result.add_term(mono, c * factor);
    return result;
  }

  /// x_index * S.
  TruncatedSeries times_variable(int index) const {
    TruncatedSeries result(variables_, bound_);
    const auto x = Monomial::unit(index);
    for (const auto& [mono, c] : terms_) result.add_term(mono * x, c);
    return result;
  }

  /// S(x_1^d, ..., x_k^d).
  TruncatedSeries substitute_power(int d) const {
    TruncatedSeries result(variables_, bound_);
    for (const auto& [mono, c] : terms_) {
      if (mono.degree() * d > bound_) break;
      result.add_term(mono.power(d), c);
    }
    return result;
  }

  /// Euler operator: every coefficient multiplied by its total degree.
  TruncatedSeries graded() const {
    TruncatedSeries result(variables_, bound_);
    for (const auto& [mono, c] : terms_) result.add_term(mono, c * Coeff(mono.degree()));
    return result;
  }

  /// All variables identified with a single x.
  TruncatedSeries collapse() const {
    TruncatedSeries result(1, bound_);
    for (const auto& [mono, c] : terms_) result.add_term(Monomial{mono.degree()}, c);
    return result;
  }

  TruncatedSeries truncated(int bound) const { return rebound(std::min(bound, bound_)); }

  /// Same terms under a new truncation order.
  TruncatedSeries rebound(int bound) const {
    TruncatedSeries result(variables_, bound);
    for (const auto& [mono, c] : terms_) result.add_term(mono, c);
    return result;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    TruncatedSeries<Out> result(variables_, bound_);
    for (const auto& [mono, c] : terms_) result.add_term(mono, f(c));
    return result;
  }

  bool operator==(const TruncatedSeries& other) const {
    return variables_ == other.variables_ && terms_ == other.terms_;
  }

 private:
  void accumulate(const Monomial& mono, const Coeff& c) { terms_[mono] += c; }

  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return is_zero(kv.second); });
  }

  int variables_;
  int bound_;
  Terms terms_;
};

using IntegerSeries = TruncatedSeries<ExactInteger>;
using RationalSeries = TruncatedSeries<ExactRational>;
using MarkerSeries = TruncatedSeries<MarkerPolynomial>;

inline RationalSeries to_rational(const IntegerSeries& s) {
  return s.map_coefficients([](const ExactInteger& c) { return ExactRational(c); });
}

inline IntegerSeries to_integer_series(const RationalSeries& s) {
  return s.map_coefficients([](const ExactRational& c) { return to_integer(c, "series coefficient"); });
}

template <class Coeff>
void require_no_constant_term(const TruncatedSeries<Coeff>& s) {
  if (!is_zero(s.coefficient(Monomial{}))) {
    throw std::logic_error("series composition needs a zero constant term");
  }
}

/// 1 / (1 - S) = sum_k S^k, for S without constant term.
template <class Coeff>
TruncatedSeries<Coeff> inverse_one_minus(const TruncatedSeries<Coeff>& s) {
  require_no_constant_term(s);
  auto result = TruncatedSeries<Coeff>::constant(s.variables(), s.bound(), Coeff(1));
  auto power = s;
  while (!power.empty()) {
    result += power;
    power = power * s;
  }
  return result;
}

/// log(1 / (1 - S)) for S without constant term. With theta the Euler
/// operator, theta(log(1/(1-S))) = theta(S) / (1 - S); degree-t
/// coefficients are then recovered by dividing by t.
inline RationalSeries log_one_over_one_minus(const RationalSeries& s) {
  const auto derivative = s.graded() * inverse_one_minus(s);
  RationalSeries result(s.variables(), s.bound());
  for (const auto& [mono, c] : derivative.terms()) result.add_term(mono, c / mono.degree());
  return result;
}

/// Cycle construction on unlabelled structures:
/// sum_{d >= 1} phi(d)/d log(1/(1 - S(x^d))).
inline RationalSeries unlabelled_cycles(const RationalSeries& s) {
  const auto log_series = log_one_over_one_minus(s);
  RationalSeries result(s.variables(), s.bound());
  for (int d = 1; d <= s.bound(); ++d) {
    result += log_series.substitute_power(d).scaled(ExactRational(totient(d), d));
  }
  return result;
}

/// The m planted series A_1..A_m solved to total degree `order`.
template <class Coeff>
struct PlantedFamily {
  int m = 2;
  int order = 1;
  bool weighted = false;
  std::vector<TruncatedSeries<Coeff>> series;

  const TruncatedSeries<Coeff>& planted(int color) const { return series.at(color - 1); }
};

namespace detail {

template <class Coeff>
TruncatedSeries<Coeff> product_except(const std::vector<TruncatedSeries<Coeff>>& family, int skip,
                                      int bound) {
  auto result = TruncatedSeries<Coeff>::constant(static_cast<int>(family.size()), bound, Coeff(1));
  for (int j = 0; j < static_cast<int>(family.size()); ++j) {
    if (j != skip) result = result * family[j].truncated(bound);
  }
  return result;
}

template <class Coeff, class Step>
PlantedFamily<Coeff> iterate_planted(int m, int order, bool weighted, Step step) {
  detail::require_m(m);
  if (m > kMaxVariables) throw Error(Errc::InvalidParameter, "m too large for the series module");
  if (order < 1) throw Error(Errc::InvalidParameter, "series order must be at least 1");
  PlantedFamily<Coeff> family{m, order, weighted, {}};
  for (int i = 0; i < m; ++i) {
    family.series.push_back(TruncatedSeries<Coeff>::variable(m, order, i).scaled(step.seed(i)));
  }
  // Each round fixes at least one more degree, so order + 1 rounds suffice.
  for (int round = 0; round <= order + 1; ++round) {
    std::vector<TruncatedSeries<Coeff>> next;
    for (int i = 0; i < m; ++i) {
      next.push_back(step(i, product_except(family.series, i, order - 1)).rebound(order).times_variable(i));
    }
    if (next == family.series) return family;
    family.series = std::move(next);
  }
  throw std::logic_error("planted fixed-point iteration did not become stationary");
}

struct UnweightedStep {
  ExactInteger seed(int) const { return 1; }
  IntegerSeries operator()(int, const IntegerSeries& hat) const { return inverse_one_minus(hat); }
};

struct WeightedStep {
  MarkerPolynomial seed(int i) const { return MarkerPolynomial::marker(i + 1, 1); }
  MarkerSeries operator()(int i, const MarkerSeries& hat) const {
    // sum_{h >= 1} r_{i,h} hat^{h-1}
    MarkerSeries result(hat.variables(), hat.bound());
    auto power = MarkerSeries::constant(hat.variables(), hat.bound(), MarkerPolynomial(1));
    for (int h = 1; !power.empty(); ++h) {
      result += power.scaled(MarkerPolynomial::marker(i + 1, h));
      power = power * hat;
    }
    return result;
  }
};

}  // namespace detail

/// Solves A_i = x_i / (1 - prod_{j != i} A_j).
inline PlantedFamily<ExactInteger> solve_planted(int m, int order) {
  return detail::iterate_planted<ExactInteger>(m, order, false, detail::UnweightedStep{});
}

/// Solves A_i = x_i sum_{h >= 1} r_{ih} (prod_{j != i} A_j)^{h-1}.
inline PlantedFamily<MarkerPolynomial> solve_planted_weighted(int m, int order) {
  return detail::iterate_planted<MarkerPolynomial>(m, order, true, detail::WeightedStep{});
}

/// Rooted cacti: A_1 A_2 ... A_m.
template <class Coeff>
TruncatedSeries<Coeff> series_rooted(const PlantedFamily<Coeff>& family) {
  return detail::product_except(family.series, -1, family.order);
}

/// Unlabelled cacti pointed at a vertex of the given color (1-based):
/// x_i (1 + sum_{d>=1} phi(d)/d log 1/(1 - Ahat_i(x^d))).
inline IntegerSeries series_pointed_unlabelled(const PlantedFamily<ExactInteger>& family, int color,
                                               int order) {
  if (family.weighted) throw Error(Errc::InvalidParameter, "pointed series needs an unweighted family");
  if (color < 1 || color > family.m) throw Error(Errc::ColorOutOfRange, "color out of range");
  if (order > family.order) throw Error(Errc::InvalidParameter, "family solved to too low an order");
  const auto hat = to_rational(detail::product_except(family.series, color - 1, order - 1));
  auto inner = unlabelled_cycles(hat);
  inner.add_term(Monomial{}, 1);
  return to_integer_series(inner.rebound(order).times_variable(color - 1));
}

/// Unlabelled unrooted cacti by color distribution, via the dissymmetry
/// relation K = sum_i K^{pointed at i} - (m-1) K^{rooted}.
inline IntegerSeries series_unlabelled(int m, int order) {
  const auto family = solve_planted(m, order);
  IntegerSeries result(m, order);
  for (int i = 1; i <= m; ++i) result += series_pointed_unlabelled(family, i, order);
  result -= series_rooted(family).scaled(m - 1);
  return result;
}

/// One-sort planted series: A = x + A^m.
inline IntegerSeries solve_one_sort(int m, int order) {
  detail::require_m(m);
  if (order < 1) throw Error(Errc::InvalidParameter, "series order must be at least 1");
  const auto x = IntegerSeries::variable(1, order, 0);
  auto a = x;
  for (int round = 0; round <= order + 1; ++round) {
    auto power = IntegerSeries::constant(1, order, 1);
    for (int k = 0; k < m; ++k) power = power * a;
    auto next = x + power;
    if (next == a) return a;
    a = std::move(next);
  }
  throw std::logic_error("one-sort iteration did not become stationary");
}

/// One-sort unlabelled cacti by vertex count,
/// m x (1 + C(A^{m-1})) - (m-1)(A - x), with the single-vertex term
/// reduced from m to 1 so that it counts the lone vertex once.
inline IntegerSeries series_unlabelled_one_sort(int m, int order) {
  const auto a = solve_one_sort(m, order);
  const auto x = IntegerSeries::variable(1, order, 0);
  auto power = IntegerSeries::constant(1, order, 1);
  for (int k = 0; k < m - 1; ++k) power = power * a;
  auto pointed = unlabelled_cycles(to_rational(power).truncated(order - 1));
  pointed.add_term(Monomial{}, 1);
  auto result = pointed.rebound(order).times_variable(0).scaled(ExactRational(m));
  result -= to_rational(a - x).scaled(m - 1);
  result -= to_rational(x).scaled(m - 1);
  return to_integer_series(result);
}

namespace detail {

/// [s^target] phi(s)^exponent for a coefficient list phi.
inline ExactInteger power_coefficient(const std::vector<ExactInteger>& phi, std::int64_t exponent,
                                      std::int64_t target) {
  std::vector<ExactInteger> base(static_cast<std::size_t>(target + 1), 0);
  for (std::size_t k = 0; k < phi.size() && k < base.size(); ++k) base[k] = phi[k];
  std::vector<ExactInteger> acc(base.size(), 0);
  acc[0] = 1;
  auto multiply = [&](const std::vector<ExactInteger>& a, const std::vector<ExactInteger>& b) {
    std::vector<ExactInteger> out(base.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  for (auto e = exponent; e > 0; e >>= 1) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
  }
  return acc[static_cast<std::size_t>(target)];
}

}  // namespace detail

/// Coefficient [x^n] A_1^{alpha_1} ... A_m^{alpha_m} where
/// A_i = x_i Phi_i(prod_{j != i} A_j), computed as
/// D * prod_i [s^{beta_i}] Phi_i(s)^{n_i} with beta = (n - alpha)/(m - 1),
/// beta_i = beta - n_i + alpha_i and
/// D = prod(1 + beta_i/n_i) - sum_j beta_j/n_j prod_{i != j}(1 + beta_i/n_i).
inline ExactInteger chottin_extract(const std::vector<std::vector<ExactInteger>>& phis,
                                    const std::vector<std::int64_t>& alphas,
                                    const std::vector<std::int64_t>& ns) {
  const auto m = static_cast<std::int64_t>(phis.size());
  if (m < 2 || static_cast<std::int64_t>(alphas.size()) != m ||
      static_cast<std::int64_t>(ns.size()) != m) {
    throw Error(Errc::InvalidParameter, "need m >= 2 series, exponents and degrees");
  }
  std::int64_t n = 0, alpha = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    if (ns[i] < 1) throw Error(Errc::InvalidParameter, "n_i must be positive");
    if (alphas[i] < 0) throw Error(Errc::InvalidParameter, "alpha_i must be nonnegative");
    if (ns[i] < alphas[i]) {
      throw Error(Errc::CoherenceViolation, "n_" + std::to_string(i + 1) + " < alpha_" +
                                                std::to_string(i + 1));
    }
    n += ns[i];
    alpha += alphas[i];
  }
  if ((n - alpha) % (m - 1) != 0) {
    throw Error(Errc::CoherenceViolation, "(n - alpha)/(m - 1) is not an integer");
  }
  const auto beta = (n - alpha) / (m - 1);
  std::vector<std::int64_t> betas(m);
  for (std::int64_t i = 0; i < m; ++i) {
    betas[i] = beta - ns[i] + alphas[i];
    if (betas[i] < 0) return 0;
  }

  std::vector<ExactRational> ratios(m), factors(m);
  for (std::int64_t i = 0; i < m; ++i) {
    ratios[i] = ExactRational(betas[i], ns[i]);
    factors[i] = 1 + ratios[i];
  }
  ExactRational d = 1;
  for (const auto& f : factors) d *= f;
  for (std::int64_t j = 0; j < m; ++j) {
    ExactRational term = ratios[j];
    for (std::int64_t i = 0; i < m; ++i) {
      if (i != j) term *= factors[i];
    }
    d -= term;
  }

  ExactRational result = d;
  for (std::int64_t i = 0; i < m; ++i) {
    result *= detail::power_coefficient(phis[i], ns[i], betas[i]);
  }
  return to_integer(result, "Chottin coefficient");
}

/// Coefficients 1, 1, 1, ... of the geometric series 1/(1 - s).
inline std::vector<ExactInteger> geometric_coefficients(std::int64_t length) {
  return std::vector<ExactInteger>(static_cast<std::size_t>(length), ExactInteger(1));
}

}  // namespace cacti
