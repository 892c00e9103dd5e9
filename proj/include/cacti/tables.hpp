#pragma once

// Row keys of the three reference tables and their recomputation from the
// closed-form counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/error.hpp"
#include "cacti/formulas.hpp"
#include "cacti/statistics.hpp"

namespace cacti {

/// Degree-distribution table rows, in reference order. The first row is
/// not coherent and is reported as rejected rather than corrected.
inline const std::vector<std::string>& table1_keys() {
  static const std::vector<std::string> keys = {
      "1^5 3^2; 2^7",
      "1^2 2^2 4^1; 1^2 2^4",
      "1^3 2^3; 1^3 2^3; 1^6 3^1",
      "1^2 2^1; 1^2 2^1; 1^2 2^1",
      "4; 1^4; 1^4",
      "2^2; 1^2 2; 1^4",
      "1 3; 1^2 2; 1^4",
      "1^2 2^2; 1^2 2^2; 1^4 2^1",
      "1^3 2^1 4^1; 1^3 2^3; 1^7 2^1",
      "1^3 2^2; 1^3 2^2; 1^3 2^2",
      "1^2 3^2; 1^4 2^2; 1^6 2^1",
      "2^4; 1^4 2^2; 1^6 2^1",
      "1^4 4^1; 1^4 2^2; 1^4 2^2",
      "1^2 2^3; 1^4 2^2; 1^4 2^2",
      "1^4 2^2; 1^4 2^2; 1^4 2^2; 1^6 2^1",
  };
  return keys;
}

/// Color-distribution table rows, in reference order (left column first).
inline const std::vector<std::vector<std::int64_t>>& table2_keys() {
  static const std::vector<std::vector<std::int64_t>> keys = {
      {7, 7},       {5, 6},       {6, 6, 7},    {4, 4, 5},    {5, 6, 8},
      {5, 5, 5},    {4, 6, 7},    {5, 6, 6},    {3, 4, 4, 5}, {6, 6, 6, 7},
      {1, 3, 3},    {2, 2, 3},    {1, 4, 4},    {2, 3, 4},    {3, 3, 3},
      {3, 3, 5},    {1, 3, 3, 3}, {2, 2, 3, 3}, {2, 3, 4, 4}, {4, 4, 4, 4},
  };
  return keys;
}

struct DegreeTableRow {
  std::string key;
  int m = 0;
  /// Set when validation rejects the key; holds the diagnostic.
  std::optional<Error> rejection;
  std::vector<ExactInteger> pointed;
  ExactInteger rooted = 0;
  ExactInteger unlabelled = 0;
  ExactInteger asymmetric = 0;
};

inline DegreeTableRow degree_table_row(const std::string& key) {
  DegreeTableRow row;
  row.key = key;
  try {
    const auto stat = degree_statistic(parse_degree_spec(key));
    row.m = stat.m();
    for (int i = 1; i <= stat.m(); ++i) row.pointed.push_back(count_pointed(stat, i));
    row.rooted = count_rooted(stat);
    row.unlabelled = count_unlabelled(stat);
    row.asymmetric = count_asymmetric(stat);
  } catch (const Error& e) {
    row.rejection = e;
  }
  return row;
}

inline std::vector<DegreeTableRow> table1() {
  std::vector<DegreeTableRow> rows;
  for (const auto& key : table1_keys()) rows.push_back(degree_table_row(key));
  return rows;
}

struct ColorTableRow {
  std::vector<std::int64_t> colors;
  ExactInteger rooted = 0;
  ExactInteger unlabelled = 0;
  ExactInteger asymmetric = 0;
};

inline std::vector<ColorTableRow> table2() {
  std::vector<ColorTableRow> rows;
  for (const auto& colors : table2_keys()) {
    const auto stat = color_statistic(colors);
    rows.push_back({colors, count_rooted(stat), count_unlabelled(stat), count_asymmetric(stat)});
  }
  return rows;
}

struct SizeTableRow {
  int m = 2;
  std::int64_t p = 0;
  std::int64_t n = 1;
  ExactInteger unlabelled = 0;
  ExactInteger asymmetric = 0;
  ExactInteger gonal = 0;
};

/// Unlabelled, asymmetric and uncolored m-gonal counts for m in
/// [m_first, m_last] and 0 <= p <= p_max.
inline std::vector<SizeTableRow> table3(int m_first, int m_last, std::int64_t p_max) {
  if (m_first > m_last) throw Error(Errc::InvalidParameter, "empty m range");
  if (p_max < 0) throw Error(Errc::InvalidParameter, "p_max must be nonnegative");
  std::vector<SizeTableRow> rows;
  for (int m = m_first; m <= m_last; ++m) {
    for (std::int64_t p = 0; p <= p_max; ++p) {
      const auto stat = size_statistic(m, p);
      rows.push_back({m, p, stat.n(), count_unlabelled(stat), count_asymmetric(stat),
                      count_gonal(m, p, GonalKind::Unlabelled)});
    }
  }
  return rows;
}

}  // namespace cacti
