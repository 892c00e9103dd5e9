#pragma once

// Exhaustive generation of small m-ary cacti and related structures, with
// automorphism data, used as ground truth for the formulas and series.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cacti/arith.hpp"
#include "cacti/error.hpp"
#include "cacti/formulas.hpp"
#include "cacti/statistics.hpp"

namespace cacti {

/// Cactus hanging from a vertex of the given color. Each polygon at that
/// vertex holds m - 1 planted sub-cacti; slot k sits at the vertex whose
/// color is k steps further counterclockwise.
struct PlantedCactus {
  int color = 1;
  std::vector<std::vector<PlantedCactus>> polygons;

  std::int64_t polygon_count() const {
    std::int64_t total = 0;
    for (const auto& polygon : polygons) {
      ++total;
      for (const auto& child : polygon) total += child.polygon_count();
    }
    return total;
  }

  bool operator==(const PlantedCactus&) const = default;
};

/// Cactus rooted at a polygon: corners[i] hangs at the root's color i+1 vertex.
struct RootedCactus {
  std::vector<PlantedCactus> corners;

  int m() const { return static_cast<int>(corners.size()); }

  std::int64_t polygon_count() const {
    std::int64_t total = 1;
    for (const auto& corner : corners) total += corner.polygon_count();
    return total;
  }

  bool operator==(const RootedCactus&) const = default;
};

/// Prefix-free preorder byte encoding: color, polygon count, then children.
inline void append_encoding(std::string& out, const PlantedCactus& planted) {
  out.push_back(static_cast<char>(planted.color));
  out.push_back(static_cast<char>(planted.polygons.size()));
  for (const auto& polygon : planted.polygons) {
    for (const auto& child : polygon) append_encoding(out, child);
  }
}

inline std::string encode(const PlantedCactus& planted) {
  std::string out;
  append_encoding(out, planted);
  return out;
}

inline std::string encode(const RootedCactus& rooted) {
  std::string out;
  for (const auto& corner : rooted.corners) append_encoding(out, corner);
  return out;
}

/// Readable nested-parenthesis form, e.g. "1[(2,3)]" for a vertex of color 1
/// carrying one triangle.
inline std::string to_text(const PlantedCactus& planted) {
  std::string out = std::to_string(planted.color);
  if (planted.polygons.empty()) return out;
  out += '[';
  for (const auto& polygon : planted.polygons) {
    out += '(';
    for (std::size_t k = 0; k < polygon.size(); ++k) {
      if (k) out += ',';
      out += to_text(polygon[k]);
    }
    out += ')';
  }
  return out + ']';
}

inline std::string to_text(const RootedCactus& rooted) {
  std::string out = "(";
  for (std::size_t i = 0; i < rooted.corners.size(); ++i) {
    if (i) out += ',';
    out += to_text(rooted.corners[i]);
  }
  return out + ')';
}

/// Explicit incidence structure.
struct CactusGraph {
  int m = 2;
  std::vector<int> vertex_color;
  /// Polygons at each vertex in counterclockwise order.
  std::vector<std::vector<int>> incident;
  /// Vertices of each polygon indexed by color - 1.
  std::vector<std::vector<int>> polygon_vertices;

  int vertex_count() const { return static_cast<int>(vertex_color.size()); }
  int polygon_count() const { return static_cast<int>(polygon_vertices.size()); }
};

namespace detail {

inline int next_color(int m, int color, int steps) { return (color - 1 + steps) % m + 1; }

inline int add_vertex(CactusGraph& g, int color) {
  g.vertex_color.push_back(color);
  g.incident.emplace_back();
  return g.vertex_count() - 1;
}

inline void attach(CactusGraph& g, const PlantedCactus& planted, int vertex) {
  for (const auto& polygon : planted.polygons) {
    const int id = g.polygon_count();
    g.polygon_vertices.emplace_back(g.m, -1);
    g.polygon_vertices[id][planted.color - 1] = vertex;
    g.incident[vertex].push_back(id);
    for (int k = 1; k < g.m; ++k) {
      const int color = next_color(g.m, planted.color, k);
      const int w = add_vertex(g, color);
      g.polygon_vertices[id][color - 1] = w;
      g.incident[w].push_back(id);
      attach(g, polygon[k - 1], w);
    }
  }
}

inline int position_of(const std::vector<int>& cycle, int value) {
  return static_cast<int>(std::find(cycle.begin(), cycle.end(), value) - cycle.begin());
}

/// Planted cactus at `vertex` using `count` incident polygons starting at
/// cyclic position `first`; every other polygon's far side hangs below.
inline PlantedCactus plant(const CactusGraph& g, int vertex, int first, int count) {
  PlantedCactus result;
  result.color = g.vertex_color[vertex];
  const auto& around = g.incident[vertex];
  const int degree = static_cast<int>(around.size());
  for (int t = 0; t < count; ++t) {
    const int polygon = around[(first + t) % degree];
    std::vector<PlantedCactus> children;
    for (int k = 1; k < g.m; ++k) {
      const int w = g.polygon_vertices[polygon][next_color(g.m, result.color, k) - 1];
      const int deg_w = static_cast<int>(g.incident[w].size());
      children.push_back(plant(g, w, position_of(g.incident[w], polygon) + 1, deg_w - 1));
    }
    result.polygons.push_back(std::move(children));
  }
  return result;
}

/// Same shape as encode() with the colors left out.
inline void append_shape(std::string& out, const PlantedCactus& planted) {
  out.push_back(static_cast<char>(planted.polygons.size()));
  for (const auto& polygon : planted.polygons) {
    for (const auto& child : polygon) append_shape(out, child);
  }
}

}  // namespace detail

inline CactusGraph to_graph(const RootedCactus& rooted) {
  CactusGraph g;
  g.m = rooted.m();
  g.polygon_vertices.emplace_back(g.m, -1);
  for (int i = 0; i < g.m; ++i) {
    const int v = detail::add_vertex(g, i + 1);
    g.polygon_vertices[0][i] = v;
    g.incident[v].push_back(0);
  }
  for (int i = 0; i < g.m; ++i) detail::attach(g, rooted.corners[i], g.polygon_vertices[0][i]);
  return g;
}

/// The rooted cactus obtained by choosing `polygon` as root.
inline RootedCactus reroot(const CactusGraph& g, int polygon) {
  RootedCactus result;
  for (int i = 0; i < g.m; ++i) {
    const int v = g.polygon_vertices.at(polygon)[i];
    const int degree = static_cast<int>(g.incident[v].size());
    result.corners.push_back(
        detail::plant(g, v, detail::position_of(g.incident[v], polygon) + 1, degree - 1));
  }
  return result;
}

/// Minimum rooted encoding over all root polygons; equal keys exactly for
/// isomorphic cacti.
inline std::string canonical_unrooted(const CactusGraph& g) {
  std::string best;
  for (int polygon = 0; polygon < g.polygon_count(); ++polygon) {
    auto key = encode(reroot(g, polygon));
    if (polygon == 0 || key < best) best = std::move(key);
  }
  return best;
}

/// Number of automorphism orbits on the vertices of the given color.
inline std::int64_t count_pointed_orbits(const CactusGraph& g, int color) {
  if (color < 1 || color > g.m) throw Error(Errc::ColorOutOfRange, "color out of range");
  std::set<std::string> keys;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_color[v] != color) continue;
    const int degree = static_cast<int>(g.incident[v].size());
    std::string best = encode(detail::plant(g, v, 0, degree));
    for (int r = 1; r < degree; ++r) best = std::min(best, encode(detail::plant(g, v, r, degree)));
    keys.insert(std::move(best));
  }
  return static_cast<std::int64_t>(keys.size());
}

/// Largest p for exhaustive cactus generation and permutation censuses.
inline std::int64_t oracle_budget(int m) {
  switch (m) {
    case 2: return 8;
    case 3: return 6;
    case 4: return 4;
    default: return 3;
  }
}

namespace detail {

inline void require_budget(int m, std::int64_t p) {
  require_m(m);
  if (p < 1) throw Error(Errc::NonPositiveP, "oracle generation needs p >= 1");
  if (p > oracle_budget(m)) {
    throw Error(Errc::BudgetExceeded, "p = " + std::to_string(p) + " exceeds the oracle budget p <= " +
                                          std::to_string(oracle_budget(m)) + " for m = " +
                                          std::to_string(m));
  }
}

/// Memoized generation of planted cacti by (color, polygon count).
class PlantedGenerator {
 public:
  explicit PlantedGenerator(int m) : m_(m) {}

  const std::vector<PlantedCactus>& planted(int color, std::int64_t k) {
    const auto key = std::make_pair(color, k);
    if (auto it = planted_.find(key); it != planted_.end()) return it->second;
    std::vector<PlantedCactus> out;
    for (auto& sequence : sequences(color, k)) out.push_back(PlantedCactus{color, std::move(sequence)});
    return planted_[key] = std::move(out);
  }

  /// Ordered tuples of planted cacti at the given colors with k polygons in total.
  std::vector<std::vector<PlantedCactus>> tuples(const std::vector<int>& colors, std::int64_t k) {
    std::vector<std::vector<PlantedCactus>> out;
    std::vector<PlantedCactus> current;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t slot, std::int64_t left) {
      if (slot == colors.size()) {
        if (left == 0) out.push_back(current);
        return;
      }
      for (std::int64_t j = 0; j <= left; ++j) {
        for (const auto& child : planted(colors[slot], j)) {
          current.push_back(child);
          rec(slot + 1, left - j);
          current.pop_back();
        }
      }
    };
    rec(0, k);
    return out;
  }

 private:
  using Sequence = std::vector<std::vector<PlantedCactus>>;

  std::vector<Sequence> sequences(int color, std::int64_t k) {
    if (k == 0) return {Sequence{}};
    std::vector<int> others;
    for (int step = 1; step < m_; ++step) others.push_back(next_color(m_, color, step));
    std::vector<Sequence> out;
    for (std::int64_t j = 1; j <= k; ++j) {
      const auto firsts = tuples(others, j - 1);
      const auto rests = sequences(color, k - j);
      for (const auto& first : firsts) {
        for (const auto& rest : rests) {
          Sequence sequence{first};
          sequence.insert(sequence.end(), rest.begin(), rest.end());
          out.push_back(std::move(sequence));
        }
      }
    }
    return out;
  }

  int m_;
  std::map<std::pair<int, std::int64_t>, std::vector<PlantedCactus>> planted_;
};

}  // namespace detail

/// All rooted m-ary cacti with p polygons, sorted by encoding.
inline std::vector<RootedCactus> generate_rooted(int m, std::int64_t p) {
  detail::require_budget(m, p);
  detail::PlantedGenerator generator(m);
  std::vector<int> colors(m);
  std::iota(colors.begin(), colors.end(), 1);
  std::vector<std::pair<std::string, RootedCactus>> keyed;
  for (auto& corners : generator.tuples(colors, p - 1)) {
    RootedCactus rooted{std::move(corners)};
    auto key = encode(rooted);
    keyed.emplace_back(std::move(key), std::move(rooted));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RootedCactus> out;
  for (auto& entry : keyed) out.push_back(std::move(entry.second));
  return out;
}

struct CactusStats {
  Params params;
  ColorDistribution colors;
  DegreeMatrix degrees;
  std::int64_t aut_order = 1;
};

inline CactusStats graph_stats(const CactusGraph& g) {
  CactusStats stats;
  const std::int64_t p = g.polygon_count();
  stats.params = Params{g.m, p, vertex_count(g.m, p)};
  stats.colors.m = g.m;
  stats.colors.counts.assign(g.m, 0);
  std::vector<DegreeMatrix::Row> rows(g.m);
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++stats.colors.counts[g.vertex_color[v] - 1];
    ++rows[g.vertex_color[v] - 1][static_cast<std::int64_t>(g.incident[v].size())];
  }
  stats.degrees = DegreeMatrix(std::move(rows));
  return stats;
}

struct UnlabelledClass {
  RootedCactus representative;
  CactusGraph graph;
  std::string key;
  std::int64_t rootings = 0;
  CactusStats stats;
};

/// Unlabelled cacti with p polygons, one class per isomorphism type, ordered
/// by canonical key. The automorphism order is p over the number of distinct
/// rootings, since rooted cacti have no symmetries.
inline std::vector<UnlabelledClass> enumerate_unlabelled(int m, std::int64_t p) {
  std::map<std::string, UnlabelledClass> classes;
  for (auto& rooted : generate_rooted(m, p)) {
    auto graph = to_graph(rooted);
    auto key = canonical_unrooted(graph);
    auto [it, inserted] = classes.try_emplace(key);
    if (inserted) {
      it->second.key = std::move(key);
      it->second.stats = graph_stats(graph);
      it->second.graph = std::move(graph);
      it->second.representative = std::move(rooted);
    }
    ++it->second.rootings;
  }
  std::vector<UnlabelledClass> out;
  for (auto& [key, cls] : classes) {
    if (p % cls.rootings != 0) {
      throw std::logic_error("rooting count " + std::to_string(cls.rootings) + " does not divide p");
    }
    cls.stats.aut_order = p / cls.rootings;
    out.push_back(std::move(cls));
  }
  return out;
}

/// Unlabelled plane m-gonal cacti without colors: colors are erased and the
/// key is minimized over root polygons and over the starting corner.
inline std::int64_t enumerate_gonal(int m, std::int64_t p) {
  std::set<std::string> keys;
  for (const auto& cls : enumerate_unlabelled(m, p)) {
    const auto& g = cls.graph;
    std::string best;
    bool first = true;
    for (int polygon = 0; polygon < g.polygon_count(); ++polygon) {
      const auto rooted = reroot(g, polygon);
      for (int r = 0; r < m; ++r) {
        std::string key;
        for (int k = 0; k < m; ++k) detail::append_shape(key, rooted.corners[(r + k) % m]);
        if (first || key < best) best = std::move(key);
        first = false;
      }
    }
    keys.insert(std::move(best));
  }
  return static_cast<std::int64_t>(keys.size());
}

using Permutation = std::vector<int>;

namespace detail {

inline std::vector<Permutation> all_permutations(std::int64_t p) {
  Permutation perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline DegreeMatrix::Row cycle_type(const Permutation& perm) {
  DegreeMatrix::Row type;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::int64_t length = 0;
    for (auto x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++length;
    }
    ++type[length];
  }
  return type;
}

inline std::int64_t cycle_count(const Permutation& perm) {
  std::int64_t total = 0;
  for (const auto& [length, count] : cycle_type(perm)) total += count;
  return total;
}

/// Calls visit(tuple) for every tuple of `arity` permutations of p points.
template <class Visit>
void for_each_tuple(std::int64_t p, int arity, Visit&& visit) {
  const auto perms = all_permutations(p);
  std::vector<std::size_t> index(static_cast<std::size_t>(arity), 0);
  std::vector<const Permutation*> tuple(static_cast<std::size_t>(arity), &perms[0]);
  while (true) {
    for (int i = 0; i < arity; ++i) tuple[i] = &perms[index[i]];
    visit(tuple);
    int slot = arity - 1;
    while (slot >= 0 && ++index[slot] == perms.size()) index[slot--] = 0;
    if (slot < 0) return;
  }
}

}  // namespace detail

using CycleTypeTuple = std::vector<DegreeMatrix::Row>;

/// Census of factorizations g_1 g_2 ... g_m of the long cycle (0 1 ... p-1)
/// in S_p by the tuple of cycle types. Products apply g_1 first.
inline std::map<CycleTypeTuple, std::int64_t> factorizations(int m, std::int64_t p) {
  detail::require_budget(m, p);
  Permutation cycle(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) cycle[x] = static_cast<int>((x + 1) % p);
  std::map<CycleTypeTuple, std::int64_t> census;
  Permutation h(cycle.size()), last(cycle.size());
  detail::for_each_tuple(p, m - 1, [&](const std::vector<const Permutation*>& gs) {
    // h = g_{m-1} o ... o g_1, and g_m = cycle o h^{-1}.
    for (std::size_t x = 0; x < h.size(); ++x) {
      int y = static_cast<int>(x);
      for (const auto* g : gs) y = (*g)[y];
      h[x] = y;
    }
    for (std::size_t x = 0; x < h.size(); ++x) last[h[x]] = cycle[x];
    CycleTypeTuple key;
    for (const auto* g : gs) key.push_back(detail::cycle_type(*g));
    key.push_back(detail::cycle_type(last));
    ++census[key];
  });
  return census;
}

/// Free labelled cacti by brute force: p-subsets of the candidate polygons
/// (one labelled vertex of each color) whose vertex-polygon incidence graph
/// is a spanning tree.
inline ExactInteger free_labelled_bruteforce(const ColorDistribution& colors) {
  const auto stat = validate(colors);
  const auto p = stat.p();
  if (p == 0) return 1;
  std::int64_t pool = 1;
  for (auto c : colors.counts) pool *= c;
  if (pool > 16 || p > 4) {
    throw Error(Errc::BudgetExceeded, "free brute force is limited to 16 candidate polygons and p <= 4");
  }
  const int m = colors.m;
  std::vector<std::int64_t> offset(m, 0);
  for (int i = 1; i < m; ++i) offset[i] = offset[i - 1] + colors.counts[i - 1];
  const auto n = stat.n();

  std::vector<std::vector<std::int64_t>> candidates;
  std::vector<std::int64_t> digits(m, 0);
  for (std::int64_t c = 0; c < pool; ++c) {
    std::vector<std::int64_t> vertices(m);
    for (int i = 0; i < m; ++i) vertices[i] = offset[i] + digits[i];
    candidates.push_back(std::move(vertices));
    for (int i = 0; i < m && ++digits[i] == colors.counts[i]; ++i) digits[i] = 0;
  }

  std::int64_t count = 0;
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<std::int64_t>(chosen.size()) == p) {
      std::vector<std::int64_t> parent(static_cast<std::size_t>(n + p));
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::int64_t(std::int64_t)> find = [&](std::int64_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      // n + p nodes and m p = n + p - 1 edges: acyclic iff spanning tree.
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const auto node = n + static_cast<std::int64_t>(k);
        for (auto v : candidates[chosen[k]]) {
          const auto a = find(v), b = find(node);
          if (a == b) return;
          parent[a] = b;
        }
      }
      ++count;
      return;
    }
    for (auto c = start; c < candidates.size(); ++c) {
      chosen.push_back(static_cast<int>(c));
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return count;
}

/// Rooted m-constellations with p polygons by exhaustive search: transitive
/// tuples (s_1, ..., s_m) in S_p whose cycle counts, together with that of
/// the inverse product, total (m-1)p + 2; divided by (p-1)! labellings.
inline ExactInteger constellation_census(int m, std::int64_t p) {
  detail::require_m(m);
  if (p < 1) throw Error(Errc::NonPositiveP, "constellations need at least one polygon");
  ExactInteger work = pow_int(static_cast<std::int64_t>(factorial(p)), m);
  if (work > 1'000'000) throw Error(Errc::BudgetExceeded, "constellation census limited to (p!)^m <= 10^6");
  std::int64_t tuples = 0;
  const std::int64_t target = (m - 1) * p + 2;
  Permutation product(static_cast<std::size_t>(p));
  detail::for_each_tuple(p, m, [&](const std::vector<const Permutation*>& sigmas) {
    std::int64_t cycles = 0;
    for (const auto* s : sigmas) cycles += detail::cycle_count(*s);
    for (std::size_t x = 0; x < product.size(); ++x) {
      int y = static_cast<int>(x);
      for (const auto* s : sigmas) y = (*s)[y];
      product[x] = y;
    }
    cycles += detail::cycle_count(product);
    if (cycles != target) return;
    std::vector<bool> reached(product.size(), false);
    std::vector<int> stack{0};
    reached[0] = true;
    std::size_t seen = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto* s : sigmas) {
        if (!reached[(*s)[x]]) {
          reached[(*s)[x]] = true;
          ++seen;
          stack.push_back((*s)[x]);
        }
      }
    }
    if (seen == product.size()) ++tuples;
  });
  return exact_div(tuples, factorial(p - 1), "constellation census");
}

struct VerifyCheck {
  std::string name;
  std::int64_t comparisons = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
};

struct VerifyReport {
  int m = 2;
  std::int64_t p_max = 1;
  std::vector<VerifyCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  }

  const VerifyCheck* first_failure() const {
    for (const auto& check : checks) {
      if (!check.passed()) return &check;
    }
    return nullptr;
  }
};

namespace detail {

class Checker {
 public:
  template <class A, class B>
  void compare(const std::string& name, const std::string& context, const A& oracle, const B& formula) {
    auto& check = find(name);
    ++check.comparisons;
    if (check.counterexample || oracle == formula) return;
    std::ostringstream os;
    os << context << ": oracle " << oracle << ", formula " << formula;
    check.counterexample = os.str();
  }

  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  VerifyCheck& find(const std::string& name) {
    for (auto& check : checks_) {
      if (check.name == name) return check;
    }
    checks_.push_back(VerifyCheck{name, 0, std::nullopt});
    return checks_.back();
  }

  std::vector<VerifyCheck> checks_;
};

struct Tally {
  std::int64_t rooted = 0;
  std::int64_t unlabelled = 0;
  std::map<std::int64_t, std::int64_t> by_aut;
  std::vector<std::int64_t> pointed;
  ExactRational reciprocal = 0;
  ExactInteger labelled = 0;
};

inline void add_to_tally(Tally& tally, const UnlabelledClass& cls, const ExactInteger& labellings) {
  tally.rooted += cls.rootings;
  ++tally.unlabelled;
  ++tally.by_aut[cls.stats.aut_order];
  const int m = cls.graph.m;
  tally.pointed.resize(m, 0);
  for (int i = 1; i <= m; ++i) tally.pointed[i - 1] += count_pointed_orbits(cls.graph, i);
  tally.reciprocal += ExactRational(1, cls.stats.aut_order);
  tally.labelled += exact_div(labellings, cls.stats.aut_order, "labelling count");
}

inline void compare_tally(Checker& checker, const Statistic& stat, const Tally& tally) {
  const auto context = describe(stat) + " (p=" + std::to_string(stat.p()) + ")";
  const auto p = stat.p();
  checker.compare("rooted", context, ExactInteger(tally.rooted), count_rooted(stat));
  checker.compare("unlabelled", context, ExactInteger(tally.unlabelled), count_unlabelled(stat));
  const auto aut = [&](std::int64_t s) {
    auto it = tally.by_aut.find(s);
    return it == tally.by_aut.end() ? std::int64_t{0} : it->second;
  };
  checker.compare("asymmetric", context, ExactInteger(aut(1)), count_asymmetric(stat));
  for (std::int64_t s = 2; s <= p; ++s) {
    std::int64_t at_least = 0;
    for (const auto& [order, count] : tally.by_aut) at_least += order % s == 0 ? count : 0;
    const auto s_context = context + " s=" + std::to_string(s);
    checker.compare("aut-exact", s_context, ExactInteger(aut(s)), count_aut(stat, s, AutMode::Exactly));
    checker.compare("aut-atleast", s_context, ExactInteger(at_least), count_aut(stat, s, AutMode::AtLeast));
  }
  std::vector<std::int64_t> pointed = tally.pointed;
  pointed.resize(stat.m(), 0);
  if (stat.level() == Level::Size) {
    const auto total = std::accumulate(pointed.begin(), pointed.end(), std::int64_t{0});
    checker.compare("pointed", context, ExactInteger(total), count_pointed(stat));
  } else {
    for (int i = 1; i <= stat.m(); ++i) {
      checker.compare("pointed", context + " color " + std::to_string(i), ExactInteger(pointed[i - 1]),
                      count_pointed(stat, i));
    }
  }
  checker.compare("labelled", context, tally.labelled, count_labelled(stat));
  if (stat.level() == Level::Degree) {
    checker.compare("reciprocal-sum", context, tally.reciprocal, aut_reciprocal_sum(stat.degrees()));
  }
}

}  // namespace detail

/// Cross-checks every oracle count against the formulas for 1 <= p <= p_max.
inline VerifyReport verify(int m, std::int64_t p_max) {
  detail::require_m(m);
  if (p_max < 1) throw Error(Errc::NonPositiveP, "verify needs p_max >= 1");
  detail::require_budget(m, p_max);
  detail::Checker checker;
  for (std::int64_t p = 1; p <= p_max; ++p) {
    const auto classes = enumerate_unlabelled(m, p);
    const auto size_stat = size_statistic(m, p);
    const auto p_context = "m=" + std::to_string(m) + " p=" + std::to_string(p);

    checker.compare("rooted-generation", p_context, ExactInteger(generate_rooted(m, p).size()),
                    count_rooted(size_stat));

    detail::Tally size_tally;
    std::map<ColorDistribution, detail::Tally> color_tallies;
    std::map<DegreeMatrix, detail::Tally> degree_tallies;
    for (const auto& cls : classes) {
      checker.compare("rooting-orbits", p_context + " " + to_text(cls.representative),
                      cls.rootings * cls.stats.aut_order, p);
      ExactInteger color_labellings = 1;
      for (auto c : cls.stats.colors.counts) color_labellings *= factorial(c);
      detail::add_to_tally(size_tally, cls, factorial(cls.stats.params.n));
      detail::add_to_tally(color_tallies[cls.stats.colors], cls, color_labellings);
      detail::add_to_tally(degree_tallies[cls.stats.degrees], cls, color_labellings);
    }

    detail::compare_tally(checker, size_stat, size_tally);
    std::size_t coherent = 0;
    for (const auto& stat : all_color_statistics(m, p)) {
      auto it = color_tallies.find(stat.colors());
      coherent += it != color_tallies.end();
      detail::compare_tally(checker, stat, it == color_tallies.end() ? detail::Tally{} : it->second);
    }
    checker.compare("color-coherence", p_context, coherent, color_tallies.size());
    coherent = 0;
    for (const auto& stat : all_degree_statistics(m, p)) {
      auto it = degree_tallies.find(stat.degrees());
      coherent += it != degree_tallies.end();
      detail::compare_tally(checker, stat, it == degree_tallies.end() ? detail::Tally{} : it->second);
    }
    checker.compare("degree-coherence", p_context, coherent, degree_tallies.size());

    // Type tuples of the long-cycle factorizations never exceed (m-1)p + 1
    // cycles in total; those reaching it are exactly the coherent matrices.
    std::map<DegreeMatrix, std::int64_t> census;
    for (const auto& [types, count] : factorizations(m, p)) {
      DegreeMatrix matrix{std::vector<DegreeMatrix::Row>(types.begin(), types.end())};
      const auto cycles = matrix.total();
      checker.compare("factorization-cycle-bound", p_context + " " + format_degree_spec(matrix),
                      cycles <= vertex_count(m, p), true);
      if (cycles == vertex_count(m, p)) census[matrix] = count;
    }
    for (const auto& stat : all_degree_statistics(m, p)) {
      auto it = census.find(stat.degrees());
      checker.compare("factorization-census", p_context + " " + format_degree_spec(stat.degrees()),
                      ExactInteger(it == census.end() ? 0 : it->second), count_rooted(stat));
    }
    checker.compare("factorization-coherence", p_context, census.size(),
                    all_degree_statistics(m, p).size());

    checker.compare("gonal", p_context, ExactInteger(enumerate_gonal(m, p)),
                    count_gonal(m, p, GonalKind::Unlabelled));
  }
  return VerifyReport{m, p_max, checker.take()};
}

}  // namespace cacti
