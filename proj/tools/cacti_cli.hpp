#pragma once

// Command-line front end. run_cli() holds all logic so tests can drive it
// without spawning processes; exit codes are 0 (ok), 1 (mismatch), 2
// (usage or validation error).

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cacti/cacti.hpp"

namespace cacti::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Mode {
  Rooted,
  Labelled,
  Pointed,
  Unlabelled,
  Asymmetric,
  AutExact,
  AutAtLeast,
  Gonal,
  Free,
  Constellation,
};

inline const std::vector<std::pair<std::string, Mode>>& mode_names() {
  static const std::vector<std::pair<std::string, Mode>> names = {
      {"rooted", Mode::Rooted},         {"labelled", Mode::Labelled},
      {"pointed", Mode::Pointed},       {"unlabelled", Mode::Unlabelled},
      {"asymmetric", Mode::Asymmetric}, {"aut-exact", Mode::AutExact},
      {"aut-atleast", Mode::AutAtLeast}, {"gonal", Mode::Gonal},
      {"free", Mode::Free},             {"constellation", Mode::Constellation},
  };
  return names;
}

inline const std::vector<std::pair<std::string, GonalKind>>& kind_names() {
  static const std::vector<std::pair<std::string, GonalKind>> names = {
      {"labelled", GonalKind::Labelled}, {"unlabelled", GonalKind::Unlabelled},
      {"pointed", GonalKind::Pointed},   {"rooted", GonalKind::Rooted},
      {"planted", GonalKind::Planted},
  };
  return names;
}

template <class T>
T lookup(const std::vector<std::pair<std::string, T>>& table, const std::string& name) {
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  throw Error(Errc::InvalidParameter, "unknown value '" + name + "'");
}

template <class T>
std::vector<std::string> keys_of(const std::vector<std::pair<std::string, T>>& table) {
  std::vector<std::string> keys;
  for (const auto& entry : table) keys.push_back(entry.first);
  return keys;
}

struct CountOptions {
  int m = 0;
  std::optional<std::int64_t> p;
  std::optional<std::string> colors;
  std::optional<std::string> degrees;
  std::string mode;
  std::optional<int> color;
  std::optional<std::int64_t> s;
  std::optional<std::string> kind;
  std::string format = "text";
  std::string path = "formula";
  std::optional<std::string> check;
};

struct Query {
  Mode mode;
  Statistic stat;
  std::optional<int> color;
  std::optional<std::int64_t> s;
  GonalKind kind = GonalKind::Unlabelled;
};

/// Turns parsed flags into a validated query; every incompatibility is an
/// Error so that it maps to exit code 2.
inline Query build_query(const CountOptions& opts) {
  const int given = opts.p.has_value() + opts.colors.has_value() + opts.degrees.has_value();
  if (given != 1) {
    throw Error(Errc::InvalidParameter, "give exactly one of --p, --colors, --degrees");
  }
  const auto mode = lookup(mode_names(), opts.mode);
  std::optional<Statistic> stat;
  if (opts.p) {
    stat = size_statistic(opts.m, *opts.p);
  } else if (opts.colors) {
    const auto colors = parse_color_vector(*opts.colors);
    if (colors.m != opts.m) {
      throw Error(Errc::InvalidParameter, "--colors has " + std::to_string(colors.m) +
                                              " entries but --m is " + std::to_string(opts.m));
    }
    stat = validate(colors);
  } else {
    const auto matrix = parse_degree_spec(*opts.degrees);
    if (matrix.m() != opts.m) {
      throw Error(Errc::InvalidParameter, "--degrees has " + std::to_string(matrix.m()) +
                                              " rows but --m is " + std::to_string(opts.m));
    }
    stat = validate(matrix);
  }

  Query query{mode, *stat, opts.color, opts.s, GonalKind::Unlabelled};
  const auto level = stat->level();
  if (mode == Mode::Pointed) {
    if (level == Level::Size && opts.color) {
      throw Error(Errc::ColorForbidden, "size-level pointed counts cover all colors; drop --color");
    }
    if (level != Level::Size && !opts.color) {
      throw Error(Errc::ColorRequired, "pointed counts by colors or degrees need --color");
    }
    if (opts.color && (*opts.color < 1 || *opts.color > opts.m)) {
      throw Error(Errc::ColorOutOfRange, "--color must lie in 1.." + std::to_string(opts.m));
    }
  } else if (opts.color) {
    throw Error(Errc::ColorForbidden, "--color only applies to --mode pointed");
  }
  const bool aut = mode == Mode::AutExact || mode == Mode::AutAtLeast;
  if (aut && !opts.s) throw Error(Errc::InvalidParameter, "--mode " + opts.mode + " needs --s");
  if (!aut && opts.s) throw Error(Errc::InvalidParameter, "--s only applies to the aut modes");
  if (aut && *opts.s < 2) throw Error(Errc::STooSmall, "--s must be at least 2");
  if (opts.kind) {
    if (mode != Mode::Gonal) throw Error(Errc::InvalidParameter, "--kind only applies to --mode gonal");
    query.kind = lookup(kind_names(), *opts.kind);
  }
  if ((mode == Mode::Gonal || mode == Mode::Constellation) && level != Level::Size) {
    throw Error(Errc::InvalidParameter, "--mode " + opts.mode + " takes --p only");
  }
  if (mode == Mode::Free && level != Level::Color) {
    throw Error(Errc::InvalidParameter, "--mode free takes --colors only");
  }
  return query;
}

inline ExactInteger count_by_formula(const Query& q) {
  switch (q.mode) {
    case Mode::Rooted: return count_rooted(q.stat);
    case Mode::Labelled: return count_labelled(q.stat);
    case Mode::Pointed: return count_pointed(q.stat, q.color);
    case Mode::Unlabelled: return count_unlabelled(q.stat);
    case Mode::Asymmetric: return count_asymmetric(q.stat);
    case Mode::AutExact: return count_aut(q.stat, *q.s, AutMode::Exactly);
    case Mode::AutAtLeast: return count_aut(q.stat, *q.s, AutMode::AtLeast);
    case Mode::Gonal: return count_gonal(q.stat.m(), q.stat.p(), q.kind);
    case Mode::Free: return count_free_labelled(q.stat.colors());
    case Mode::Constellation: return count_constellation_rooted(q.stat.m(), q.stat.p());
  }
  return 0;
}

inline ExactInteger count_by_oracle(const Query& q) {
  const int m = q.stat.m();
  const auto p = q.stat.p();
  switch (q.mode) {
    case Mode::Free: return free_labelled_bruteforce(q.stat.colors());
    case Mode::Constellation: return constellation_census(m, p);
    case Mode::Gonal:
      if (q.kind != GonalKind::Unlabelled) {
        throw Error(Errc::InvalidParameter, "the oracle covers unlabelled gonal counts only");
      }
      return enumerate_gonal(m, p);
    default:
      break;
  }
  if (p == 0) throw Error(Errc::NonPositiveP, "the oracle starts at p = 1");
  const auto matches = [&](const CactusStats& stats) {
    switch (q.stat.level()) {
      case Level::Size: return true;
      case Level::Color: return stats.colors == q.stat.colors();
      case Level::Degree: return stats.degrees == q.stat.degrees();
    }
    return false;
  };
  ExactInteger total = 0;
  for (const auto& cls : enumerate_unlabelled(m, p)) {
    if (!matches(cls.stats)) continue;
    const auto aut = cls.stats.aut_order;
    switch (q.mode) {
      case Mode::Rooted: total += cls.rootings; break;
      case Mode::Unlabelled: total += 1; break;
      case Mode::Asymmetric: total += aut == 1 ? 1 : 0; break;
      case Mode::AutExact: total += aut == *q.s ? 1 : 0; break;
      case Mode::AutAtLeast: total += aut % *q.s == 0 ? 1 : 0; break;
      case Mode::Pointed:
        if (q.color) {
          total += count_pointed_orbits(cls.graph, *q.color);
        } else {
          for (int i = 1; i <= m; ++i) total += count_pointed_orbits(cls.graph, i);
        }
        break;
      case Mode::Labelled: {
        ExactInteger labellings = 1;
        if (q.stat.level() == Level::Size) {
          labellings = factorial(cls.stats.params.n);
        } else {
          for (auto c : cls.stats.colors.counts) labellings *= factorial(c);
        }
        total += labellings / aut;
        break;
      }
      default:
        break;
    }
  }
  return total;
}

/// Largest one-sort order accepted by the series paths.
inline constexpr int kMaxOneSortOrder = 150;
/// Largest number of monomials of total degree <= order in m variables.
inline constexpr std::int64_t kMaxSeriesMonomials = 5000;

inline void require_series_bound(int m, std::int64_t order, bool one_sort) {
  if (order < 1) throw Error(Errc::InvalidParameter, "--order must be at least 1");
  if (one_sort) {
    if (order > kMaxOneSortOrder) {
      throw Error(Errc::BudgetExceeded,
                  "one-sort order is limited to " + std::to_string(kMaxOneSortOrder));
    }
    return;
  }
  if (m > kMaxVariables || binomial(order + m, m) > kMaxSeriesMonomials) {
    throw Error(Errc::BudgetExceeded, "series with " + std::to_string(m) + " variables to order " +
                                          std::to_string(order) + " exceed " +
                                          std::to_string(kMaxSeriesMonomials) + " monomials");
  }
}

inline IntegerSeries one_sort_rooted(int m, int order) {
  const auto a = solve_one_sort(m, order);
  auto power = IntegerSeries::constant(1, order, 1);
  for (int k = 0; k < m; ++k) power = power * a;
  return power;
}

inline ExactInteger count_by_series(const Query& q) {
  const int m = q.stat.m();
  const int n = static_cast<int>(q.stat.n());
  const auto unsupported = [&] {
    return Error(Errc::InvalidParameter, "no series path for this mode and statistic");
  };
  switch (q.stat.level()) {
    case Level::Size:
      require_series_bound(m, n, true);
      if (q.mode == Mode::Unlabelled) return series_unlabelled_one_sort(m, n).coefficient({n});
      if (q.mode == Mode::Rooted) return one_sort_rooted(m, n).coefficient({n});
      throw unsupported();
    case Level::Color: {
      require_series_bound(m, n, false);
      std::vector<int> exponents(q.stat.colors().counts.begin(), q.stat.colors().counts.end());
      if (q.mode == Mode::Rooted) return series_rooted(solve_planted(m, n)).coefficient(exponents);
      if (q.mode == Mode::Unlabelled) return series_unlabelled(m, n).coefficient(exponents);
      if (q.mode == Mode::Pointed) {
        return series_pointed_unlabelled(solve_planted(m, n), *q.color, n).coefficient(exponents);
      }
      throw unsupported();
    }
    case Level::Degree: {
      if (q.mode != Mode::Rooted) throw unsupported();
      require_series_bound(m, n, false);
      const auto marginal = color_marginal(q.stat.degrees());
      std::vector<int> exponents(marginal.counts.begin(), marginal.counts.end());
      return series_rooted(solve_planted_weighted(m, n))
          .coefficient(exponents)
          .coefficient(to_marker_monomial(q.stat.degrees()));
    }
  }
  throw unsupported();
}

inline nlohmann::ordered_json query_json(const CountOptions& opts, const Query& q) {
  nlohmann::ordered_json j;
  j["m"] = opts.m;
  switch (q.stat.level()) {
    case Level::Size: j["p"] = q.stat.p(); break;
    case Level::Color: j["colors"] = q.stat.colors().counts; break;
    case Level::Degree: j["degrees"] = format_degree_spec(q.stat.degrees()); break;
  }
  j["mode"] = opts.mode;
  if (q.color) j["color"] = *q.color;
  if (q.s) j["s"] = *q.s;
  if (q.mode == Mode::Gonal) j["kind"] = opts.kind.value_or("unlabelled");
  if (opts.check) j["check"] = *opts.check;
  return j;
}

inline int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err) {
  const auto query = build_query(opts);
  ExactInteger count;
  if (opts.path == "formula") {
    count = count_by_formula(query);
  } else if (opts.path == "series") {
    count = count_by_series(query);
  } else {
    count = count_by_oracle(query);
  }
  if (opts.check) {
    const auto oracle = count_by_oracle(query);
    if (oracle != count) {
      err << "mismatch: " << opts.path << " path gives " << count << ", oracle gives " << oracle << "\n";
      return kExitMismatch;
    }
  }
  if (opts.format == "json") {
    nlohmann::ordered_json j;
    j["query"] = query_json(opts, query);
    j["count"] = to_decimal(count);
    j["path"] = opts.path;
    out << j.dump() << "\n";
  } else {
    out << count << "\n";
  }
  return kExitOk;
}

inline std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int m = std::stoi(text);
      return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::SyntaxError, "--m-range expects A..B, got '" + text + "'");
  }
}

inline std::string join(const std::vector<ExactInteger>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(values[i]);
  }
  return out;
}

inline std::string join(const std::vector<std::int64_t>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

/// Left-aligned text columns, two spaces apart.
inline void print_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

inline void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      const bool quote = row[c].find_first_of(",\"") != std::string::npos;
      out << (quote ? "\"" + row[c] + "\"" : row[c]);
    }
    out << "\n";
  }
}

struct TableOptions {
  std::string which;
  std::string format = "text";
  std::string m_range = "2..7";
  std::int64_t p_max = 12;
};

inline int cmd_table(const TableOptions& opts, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  if (opts.which == "1") {
    rows.push_back({"m", "degrees", "pointed", "rooted", "unlabelled", "asymmetric", "status"});
    for (const auto& row : table1()) {
      if (row.rejection) {
        rows.push_back({"-", row.key, "-", "-", "-", "-",
                        std::string("COHERENCE-FAIL ") + row.rejection->what()});
        continue;
      }
      rows.push_back({std::to_string(row.m), row.key, join(row.pointed, " "), to_decimal(row.rooted),
                      to_decimal(row.unlabelled), to_decimal(row.asymmetric), "ok"});
    }
  } else if (opts.which == "2") {
    rows.push_back({"colors", "rooted", "unlabelled", "asymmetric"});
    for (const auto& row : table2()) {
      rows.push_back({"(" + join(row.colors, ",") + ")", to_decimal(row.rooted),
                      to_decimal(row.unlabelled), to_decimal(row.asymmetric)});
    }
  } else {
    const auto [first, last] = parse_m_range(opts.m_range);
    rows.push_back({"m", "p", "n", "unlabelled", "asymmetric", "gonal"});
    for (const auto& row : table3(first, last, opts.p_max)) {
      rows.push_back({std::to_string(row.m), std::to_string(row.p), std::to_string(row.n),
                      to_decimal(row.unlabelled), to_decimal(row.asymmetric), to_decimal(row.gonal)});
    }
  }
  if (opts.format == "csv") {
    print_csv(out, rows);
  } else {
    print_columns(out, rows);
  }
  return kExitOk;
}

inline int cmd_verify(int m, std::int64_t p_max, std::ostream& out, std::ostream& err) {
  const auto report = verify(m, p_max);
  for (const auto& check : report.checks) {
    out << (check.passed() ? "PASS " : "FAIL ") << check.name << " (" << check.comparisons
        << " comparisons)\n";
  }
  if (const auto* failure = report.first_failure()) {
    err << "first counterexample [" << failure->name << "]: " << *failure->counterexample << "\n";
    return kExitMismatch;
  }
  out << "all checks passed for m=" << m << ", p<=" << p_max << "\n";
  return kExitOk;
}

struct SeriesOptions {
  int m = 0;
  int order = 0;
  std::string target = "rooted";
  bool one_sort = false;
  std::string format = "text";
};

inline int cmd_series(const SeriesOptions& opts, std::ostream& out) {
  detail::require_m(opts.m);
  require_series_bound(opts.m, opts.order, opts.one_sort);
  std::vector<std::pair<std::string, IntegerSeries>> listing;
  if (opts.one_sort) {
    if (opts.target == "planted") listing.emplace_back("A", solve_one_sort(opts.m, opts.order));
    if (opts.target == "rooted") listing.emplace_back("K_rooted", one_sort_rooted(opts.m, opts.order));
    if (opts.target == "unlabelled") {
      listing.emplace_back("K", series_unlabelled_one_sort(opts.m, opts.order));
    }
  } else if (opts.target == "unlabelled") {
    listing.emplace_back("K", series_unlabelled(opts.m, opts.order));
  } else {
    const auto family = solve_planted(opts.m, opts.order);
    if (opts.target == "rooted") {
      listing.emplace_back("K_rooted", series_rooted(family));
    } else {
      for (int i = 1; i <= opts.m; ++i) listing.emplace_back("A_" + std::to_string(i), family.planted(i));
    }
  }

  if (opts.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = opts.m;
    j["order"] = opts.order;
    j["target"] = opts.target;
    j["one_sort"] = opts.one_sort;
    j["series"] = nlohmann::ordered_json::array();
    for (const auto& [name, series] : listing) {
      nlohmann::ordered_json entry;
      entry["name"] = name;
      entry["terms"] = nlohmann::ordered_json::array();
      for (const auto& [mono, c] : series.terms()) {
        entry["terms"].push_back({{"monomial", format_monomial(mono, series.variables())},
                                  {"exponents", mono.exponents(series.variables())},
                                  {"coefficient", to_decimal(c)}});
      }
      j["series"].push_back(std::move(entry));
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  for (const auto& [name, series] : listing) {
    out << "# " << name << "\n";
    for (const auto& [mono, c] : series.terms()) {
      out << format_monomial(mono, series.variables()) << " " << c << "\n";
    }
  }
  return kExitOk;
}

inline int cmd_enumerate(int m, std::int64_t p, bool with_stats, std::ostream& out) {
  for (const auto& cls : enumerate_unlabelled(m, p)) {
    out << to_text(cls.representative);
    if (with_stats) {
      out << "\taut=" << cls.stats.aut_order << "\tcolors=" << format_color_vector(cls.stats.colors)
          << "\tdegrees=" << format_degree_spec(cls.stats.degrees);
    }
    out << "\n";
  }
  return kExitOk;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of m-ary cacti", "cacti"};
  app.require_subcommand(1);

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Count cacti by size, colors or degrees");
  count_cmd->add_option("--m", count.m, "Polygon size m >= 2")->required();
  count_cmd->add_option("--p", count.p, "Number of polygons");
  count_cmd->add_option("--colors", count.colors, "Color distribution, e.g. 4,4,5");
  count_cmd->add_option("--degrees", count.degrees, "Degree distribution, e.g. \"1^2 2^2 4; 1^2 2^4\"");
  count_cmd->add_option("--mode", count.mode, "What to count")
      ->required()
      ->check(CLI::IsMember(keys_of(mode_names())));
  count_cmd->add_option("--color", count.color, "Pointed color (1-based)");
  count_cmd->add_option("--s", count.s, "Automorphism order for the aut modes");
  count_cmd->add_option("--kind", count.kind, "Gonal kind")->check(CLI::IsMember(keys_of(kind_names())));
  count_cmd->add_option("--format", count.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  count_cmd->add_option("--path", count.path, "Computation path")
      ->check(CLI::IsMember({"formula", "series", "oracle"}));
  count_cmd->add_option("--check", count.check, "Recompute with the oracle and compare")
      ->check(CLI::IsMember({"oracle"}));

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Recompute a reference table");
  table_cmd->add_option("which", table.which, "Table number")->required()->check(CLI::IsMember({"1", "2", "3"}));
  table_cmd->add_option("--format", table.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
  table_cmd->add_option("--m-range", table.m_range, "Range of m for table 3, e.g. 2..7");
  table_cmd->add_option("--p-max", table.p_max, "Largest p for table 3");

  int verify_m = 0;
  std::int64_t verify_p_max = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check oracle and formulas");
  verify_cmd->add_option("--m", verify_m, "Polygon size m >= 2")->required();
  verify_cmd->add_option("--p-max", verify_p_max, "Largest p to check")->required();

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Print generating series coefficients");
  series_cmd->add_option("--m", series.m, "Polygon size m >= 2")->required();
  series_cmd->add_option("--order", series.order, "Truncation order (total degree)")->required();
  series_cmd->add_option("--target", series.target, "Series to print")
      ->check(CLI::IsMember({"planted", "rooted", "unlabelled"}));
  series_cmd->add_flag("--one-sort", series.one_sort, "Identify all color variables");
  series_cmd->add_option("--format", series.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int enum_m = 0;
  std::int64_t enum_p = 0;
  bool enum_stats = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "List unlabelled cacti, one per line");
  enum_cmd->add_option("--m", enum_m, "Polygon size m >= 2")->required();
  enum_cmd->add_option("--p", enum_p, "Number of polygons")->required();
  enum_cmd->add_flag("--stats", enum_stats, "Append automorphism order, colors and degrees");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count, out, err);
    if (table_cmd->parsed()) return cmd_table(table, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_m, verify_p_max, out, err);
    if (series_cmd->parsed()) return cmd_series(series, out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_m, enum_p, enum_stats, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace cacti::cli
