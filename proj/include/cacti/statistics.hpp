#pragma once

// Statistic levels for m-ary cacti: polygon count, vertex-color distribution
// and vertex-degree distribution, with the coherence checks that decide
// whether some cactus realizes them.
//
// Colors are 1-based in every public signature (1..m); vectors indexed by
// color are 0-based internally.

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/error.hpp"

namespace cacti {

struct Params {
  int m = 2;
  std::int64_t p = 0;
  std::int64_t n = 1;

  auto operator<=>(const Params&) const = default;
};

inline std::int64_t vertex_count(int m, std::int64_t p) { return (m - 1) * p + 1; }

struct ColorDistribution {
  int m = 0;
  std::vector<std::int64_t> counts;

  std::int64_t count(int color) const { return counts.at(color - 1); }
  std::int64_t total() const {
    std::int64_t n = 0;
    for (auto c : counts) n += c;
    return n;
  }

  auto operator<=>(const ColorDistribution&) const = default;
};

/// Sparse matrix N = (n_ij): row i maps a degree j to the number of color-i
/// vertices of that degree. Absent entries are zero.
class DegreeMatrix {
 public:
  using Row = std::map<std::int64_t, std::int64_t>;

  DegreeMatrix() = default;

  explicit DegreeMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (auto& row : rows_) {
      for (auto it = row.begin(); it != row.end();) {
        if (it->second < 0 || it->first < 0) {
          throw Error(Errc::InvalidParameter, "degree matrix entries must be nonnegative");
        }
        it = it->second == 0 ? row.erase(it) : std::next(it);
      }
    }
  }

  int m() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int color) const { return rows_.at(color - 1); }

  std::int64_t entry(int color, std::int64_t degree) const {
    const auto& r = row(color);
    auto it = r.find(degree);
    return it == r.end() ? 0 : it->second;
  }

  /// n_i, the number of color-i vertices.
  std::int64_t color_count(int color) const {
    std::int64_t n = 0;
    for (const auto& [degree, mult] : row(color)) n += mult;
    return n;
  }

  /// sum_j j * n_ij.
  std::int64_t row_weight(int color) const {
    std::int64_t w = 0;
    for (const auto& [degree, mult] : row(color)) w += degree * mult;
    return w;
  }

  std::int64_t total() const {
    std::int64_t n = 0;
    for (int i = 1; i <= m(); ++i) n += color_count(i);
    return n;
  }

  auto operator<=>(const DegreeMatrix&) const = default;

 private:
  std::vector<Row> rows_;
};

struct SizeSpec {
  int m = 2;
  std::int64_t p = 0;

  auto operator<=>(const SizeSpec&) const = default;
};

using RawStatistic = std::variant<SizeSpec, ColorDistribution, DegreeMatrix>;

enum class Level { Size, Color, Degree };

class Statistic;
Statistic validate(const RawStatistic& raw);

/// A statistic that passed the coherence checks, together with its derived
/// parameters. Only `validate` (and functions built on it) create these.
class Statistic {
 public:
  Level level() const { return static_cast<Level>(payload_.index()); }
  const Params& params() const { return params_; }
  int m() const { return params_.m; }
  std::int64_t p() const { return params_.p; }
  std::int64_t n() const { return params_.n; }

  const ColorDistribution& colors() const { return std::get<ColorDistribution>(payload_); }
  const DegreeMatrix& degrees() const { return std::get<DegreeMatrix>(payload_); }
  const RawStatistic& raw() const { return payload_; }

  bool operator==(const Statistic& other) const {
    return params_ == other.params_ && payload_ == other.payload_;
  }

 private:
  Statistic(RawStatistic payload, Params params)
      : payload_(std::move(payload)), params_(params) {}

  friend Statistic validate(const RawStatistic& raw);
  friend Statistic shift(const Statistic& stat, int k);

  RawStatistic payload_;
  Params params_;
};

namespace detail {

inline void require_m(int m) {
  if (m < 2) throw Error(Errc::InvalidParameter, "m must be at least 2, got " + std::to_string(m));
}

inline std::int64_t derive_p(int m, std::int64_t n) {
  if (n < 1 || (n - 1) % (m - 1) != 0) {
    throw Error(Errc::NonIntegralP, "vertex-count coherence: (n-1)/(m-1) = (" + std::to_string(n) +
                                        "-1)/" + std::to_string(m - 1) +
                                        " is not a nonnegative integer");
  }
  return (n - 1) / (m - 1);
}

}  // namespace detail

inline Statistic validate(const RawStatistic& raw) {
  if (const auto* size = std::get_if<SizeSpec>(&raw)) {
    detail::require_m(size->m);
    if (size->p < 0) throw Error(Errc::InvalidParameter, "polygon count must be nonnegative");
    return Statistic(raw, Params{size->m, size->p, vertex_count(size->m, size->p)});
  }

  if (const auto* colors = std::get_if<ColorDistribution>(&raw)) {
    detail::require_m(colors->m);
    if (static_cast<int>(colors->counts.size()) != colors->m) {
      throw Error(Errc::InvalidParameter, "color vector must have m components");
    }
    for (auto c : colors->counts) {
      if (c < 0) throw Error(Errc::InvalidParameter, "color counts must be nonnegative");
    }
    const auto n = colors->total();
    const auto p = detail::derive_p(colors->m, n);
    if (p >= 1) {
      for (int i = 1; i <= colors->m; ++i) {
        if (colors->count(i) > p) {
          throw Error(Errc::ColorBoundViolation,
                      "color-bound coherence: n_" + std::to_string(i) + " = " +
                          std::to_string(colors->count(i)) + " exceeds p = " + std::to_string(p));
        }
      }
    }
    return Statistic(raw, Params{colors->m, p, n});
  }

  const auto& degrees = std::get<DegreeMatrix>(raw);
  detail::require_m(degrees.m());
  const auto weight = degrees.row_weight(1);
  for (int i = 2; i <= degrees.m(); ++i) {
    if (degrees.row_weight(i) != weight) {
      throw Error(Errc::RowSumMismatch, "degree coherence: row sums differ (color 1 has " +
                                            std::to_string(weight) + ", color " +
                                            std::to_string(i) + " has " +
                                            std::to_string(degrees.row_weight(i)) + ")");
    }
  }
  const auto n = degrees.total();
  const auto p = detail::derive_p(degrees.m(), n);
  if (p != weight) {
    throw Error(Errc::RowSumMismatch, "degree coherence: row sums are " + std::to_string(weight) +
                                          " but the vertex count gives p = " + std::to_string(p));
  }
  if (p >= 1) {
    for (int i = 1; i <= degrees.m(); ++i) {
      if (degrees.entry(i, 0) > 0) {
        throw Error(Errc::IsolatedDegreeZero,
                    "degree coherence: color " + std::to_string(i) + " has degree-0 vertices");
      }
    }
  }
  return Statistic(raw, Params{degrees.m(), p, n});
}

inline Statistic size_statistic(int m, std::int64_t p) { return validate(SizeSpec{m, p}); }

inline Statistic color_statistic(std::vector<std::int64_t> counts) {
  const int m = static_cast<int>(counts.size());
  return validate(ColorDistribution{m, std::move(counts)});
}

inline Statistic degree_statistic(DegreeMatrix matrix) { return validate(std::move(matrix)); }

inline ColorDistribution color_marginal(const DegreeMatrix& matrix) {
  ColorDistribution result{matrix.m(), {}};
  for (int i = 1; i <= matrix.m(); ++i) result.counts.push_back(matrix.color_count(i));
  return result;
}

/// Cyclic relabelling of colors: color i of the result carries color i+k of
/// the input (indices mod m). Size statistics are returned unchanged.
inline Statistic shift(const Statistic& stat, int k) {
  const int m = stat.m();
  const int r = ((k % m) + m) % m;
  switch (stat.level()) {
    case Level::Size:
      return stat;
    case Level::Color: {
      ColorDistribution out{m, std::vector<std::int64_t>(m)};
      for (int i = 0; i < m; ++i) out.counts[i] = stat.colors().counts[(i + r) % m];
      return Statistic(out, stat.params());
    }
    case Level::Degree: {
      std::vector<DegreeMatrix::Row> rows(m);
      for (int i = 0; i < m; ++i) rows[i] = stat.degrees().rows()[(i + r) % m];
      return Statistic(DegreeMatrix(std::move(rows)), stat.params());
    }
  }
  return stat;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_positive(std::string_view token, std::string_view whole) {
  if (token.empty() || token.size() > 12) {
    throw Error(Errc::SyntaxError, "bad number in '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(Errc::SyntaxError, "unexpected '" + std::string(1, ch) + "' in '" +
                                         std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  if (value < 1) throw Error(Errc::SyntaxError, "values must be >= 1 in '" + std::string(whole) + "'");
  return value;
}

}  // namespace detail

/// Parses "1^5 3^3; 2^7": rows separated by ';', terms `j^k` or `j` (k = 1).
/// The resulting matrix is validated before it is returned.
inline DegreeMatrix parse_degree_spec(std::string_view text) {
  std::vector<DegreeMatrix::Row> rows;
  std::size_t start = 0;
  while (true) {
    const auto stop = text.find(';', start);
    const auto row_text = detail::trim(text.substr(start, stop == std::string_view::npos
                                                               ? std::string_view::npos
                                                               : stop - start));
    if (row_text.empty()) throw Error(Errc::SyntaxError, "empty row in degree spec");
    DegreeMatrix::Row row;
    std::istringstream terms{std::string(row_text)};
    std::string term;
    while (terms >> term) {
      const auto caret = term.find('^');
      const std::string_view view(term);
      const auto degree = detail::parse_positive(view.substr(0, caret), text);
      const auto mult = caret == std::string::npos
                            ? std::int64_t{1}
                            : detail::parse_positive(view.substr(caret + 1), text);
      if (!row.emplace(degree, mult).second) {
        throw Error(Errc::DuplicateDegree,
                    "degree " + std::to_string(degree) + " repeated within a row");
      }
    }
    rows.push_back(std::move(row));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  DegreeMatrix matrix(std::move(rows));
  validate(matrix);
  return matrix;
}

inline std::string format_degree_spec(const DegreeMatrix& matrix) {
  std::string out;
  for (int i = 1; i <= matrix.m(); ++i) {
    if (i > 1) out += "; ";
    bool first = true;
    for (const auto& [degree, mult] : matrix.row(i)) {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(degree) + "^" + std::to_string(mult);
    }
  }
  return out;
}

/// Parses "4,4,5" into a (not yet validated) color distribution.
inline ColorDistribution parse_color_vector(std::string_view text) {
  ColorDistribution result;
  std::size_t start = 0;
  while (true) {
    const auto stop = text.find(',', start);
    const auto token = detail::trim(text.substr(
        start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
    if (token == "0") {
      result.counts.push_back(0);
    } else {
      result.counts.push_back(detail::parse_positive(token, text));
    }
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  result.m = static_cast<int>(result.counts.size());
  return result;
}

inline std::string format_color_vector(const ColorDistribution& colors) {
  std::string out;
  for (std::size_t i = 0; i < colors.counts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(colors.counts[i]);
  }
  return out;
}

inline std::string describe(const Statistic& stat) {
  switch (stat.level()) {
    case Level::Size:
      return "m=" + std::to_string(stat.m()) + " p=" + std::to_string(stat.p());
    case Level::Color:
      return "m=" + std::to_string(stat.m()) + " colors=(" + format_color_vector(stat.colors()) + ")";
    case Level::Degree:
      return "m=" + std::to_string(stat.m()) + " degrees=(" + format_degree_spec(stat.degrees()) +
             ")";
  }
  return {};
}

/// All partitions of `total` as degree -> multiplicity rows (no zero parts).
inline std::vector<DegreeMatrix::Row> degree_rows(std::int64_t total) {
  std::vector<DegreeMatrix::Row> out;
  DegreeMatrix::Row current;
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
      for (std::int64_t k = 1; k * part <= remaining; ++k) {
        current[part] = k;
        self(self, remaining - k * part, part - 1);
      }
      current.erase(part);
    }
  };
  rec(rec, total, total);
  return out;
}

/// Every color vector accepted by `validate` for the given (m, p).
inline std::vector<Statistic> all_color_statistics(int m, std::int64_t p) {
  std::vector<Statistic> out;
  const auto n = vertex_count(m, p);
  std::vector<std::int64_t> counts(m, 0);
  auto rec = [&](auto&& self, int index, std::int64_t remaining) -> void {
    if (index == m - 1) {
      counts[index] = remaining;
      try {
        out.push_back(validate(ColorDistribution{m, counts}));
      } catch (const Error&) {
      }
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      counts[index] = c;
      self(self, index + 1, remaining - c);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// Every degree matrix accepted by `validate` for the given (m, p >= 1).
inline std::vector<Statistic> all_degree_statistics(int m, std::int64_t p) {
  std::vector<Statistic> out;
  const auto rows = degree_rows(p);
  std::vector<DegreeMatrix::Row> current(m);
  auto rec = [&](auto&& self, int index) -> void {
    if (index == m) {
      DegreeMatrix matrix(current);
      if (matrix.total() != vertex_count(m, p)) return;
      out.push_back(validate(matrix));
      return;
    }
    for (const auto& row : rows) {
      current[index] = row;
      self(self, index + 1);
    }
  };
  if (p >= 1) rec(rec, 0);
  return out;
}

}  // namespace cacti
