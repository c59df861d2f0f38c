#include "mrdd/roman.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mrdd {

namespace {

constexpr int kMaxSearchVertices = 30;
constexpr int kMaxBruteVertices = 12;

std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

// Shared precomputation for the subset searches: closed neighborhoods as
// bitmasks and, per vertex, the largest neighbor index (-1 when isolated).
struct SearchContext {
  int n;
  std::uint32_t full;
  std::vector<std::uint32_t> closed_nb;
  std::vector<int> nb_max;

  explicit SearchContext(const Graph& g) : n(g.num_vertices()) {
    if (n > kMaxSearchVertices)
      throw std::length_error("subset search limited to 30 vertices, got " + std::to_string(n));
    full = (1u << n) - 1u;
    closed_nb.assign(n, 0);
    nb_max.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      closed_nb[v] = 1u << v;
      for (int u : g.neighbors(v)) {
        closed_nb[v] |= 1u << u;
        nb_max[v] = std::max(nb_max[v], u);
      }
    }
  }

  // Vertices already excluded from the set that no remaining choice can
  // dominate: every neighbor sits below `idx` and none was picked.
  int forced_undominated(std::uint32_t s, std::uint32_t dominated, int idx) const {
    std::uint32_t decided_out = (idx >= 32 ? ~0u : ((1u << idx) - 1u)) & ~s & ~dominated;
    int count = 0;
    for (std::uint32_t m = decided_out; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (nb_max[v] < idx) ++count;
    }
    return count;
  }
};

// Include-first depth-first search over V2 subsets in vertex index order.
// Visiting the include branch before the exclude branch yields leaves in
// exactly the rdf_less order (the first of two subsets to contain the
// minimum of their symmetric difference is reached first), so the first
// optimal leaf is the canonical minimum and collected leaves need no sort.
struct RomanSearch {
  const SearchContext& ctx;
  int best;  // current upper bound on the weight (phase 1) or gamma_R (phase 2)
  bool enumerate = false;
  int max_collect = 0;               // stop as soon as this many optima are found
  std::vector<std::uint32_t> found;  // V2 masks of optimal leaves, in order

  RomanSearch(const SearchContext& c, int initial_best) : ctx(c), best(initial_best) {}

  // Returns true to stop the whole search (collection limit reached).
  bool dfs(int idx, std::uint32_t s, std::uint32_t dominated) {
    int lb = 2 * std::popcount(s) + ctx.forced_undominated(s, dominated, idx);
    if (enumerate ? lb > best : lb >= best) return false;
    if (idx == ctx.n) {
      int weight = 2 * std::popcount(s) + std::popcount(ctx.full & ~dominated);
      if (enumerate) {
        if (weight == best) {
          found.push_back(s);
          return static_cast<int>(found.size()) == max_collect;
        }
      } else if (weight < best) {
        best = weight;
      }
      return false;
    }
    if (dfs(idx + 1, s | (1u << idx), dominated | ctx.closed_nb[idx])) return true;
    return dfs(idx + 1, s, dominated);
  }
};

// Cheap feasible solution to seed the phase 1 bound: grow V2 greedily by
// coverage, never worse than the all-ones labeling.
int greedy_upper_bound(const SearchContext& ctx) {
  std::uint32_t s = 0, dominated = 0;
  int size = 0;
  while (dominated != ctx.full) {
    int best_v = -1, best_gain = 0;
    for (int v = 0; v < ctx.n; ++v) {
      if (s & (1u << v)) continue;
      int gain = std::popcount(ctx.closed_nb[v] & ~dominated);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    if (best_v < 0) break;
    s |= 1u << best_v;
    dominated |= ctx.closed_nb[best_v];
    ++size;
  }
  return std::min(ctx.n, 2 * size + std::popcount(ctx.full & ~dominated));
}

RomanDominatingFunction rdf_from_mask(const SearchContext& ctx, std::uint32_t s) {
  std::uint32_t dominated = 0;
  for (std::uint32_t m = s; m; m &= m - 1) dominated |= ctx.closed_nb[std::countr_zero(m)];
  RomanDominatingFunction f;
  f.v2 = bits_of(s);
  f.v1 = bits_of(ctx.full & ~dominated);
  f.v0 = bits_of(ctx.full & dominated & ~s);
  return f;
}

int solve_gamma_r(const SearchContext& ctx) {
  RomanSearch phase1(ctx, greedy_upper_bound(ctx) + 1);
  phase1.dfs(0, 0, 0);
  return phase1.best;
}

}  // namespace

bool is_valid_rdf(const Graph& g, const RomanDominatingFunction& f) {
  const int n = g.num_vertices();
  std::vector<int> label(n, -1);
  auto assign = [&](const std::vector<int>& part, int value) {
    for (int v : part) {
      if (v < 0 || v >= n || label[v] != -1) return false;
      label[v] = value;
    }
    return true;
  };
  if (!assign(f.v0, 0) || !assign(f.v1, 1) || !assign(f.v2, 2)) return false;
  for (int v = 0; v < n; ++v)
    if (label[v] == -1) return false;
  for (int v : f.v0) {
    bool guarded = false;
    for (int u : g.neighbors(v))
      if (label[u] == 2) {
        guarded = true;
        break;
      }
    if (!guarded) return false;
  }
  return true;
}

namespace {

// Element-wise comparison of sorted index lists where a missing entry
// reads as +infinity; ties broken nowhere (equal lists compare equal).
bool less_absent_infinity(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    long long av = i < a.size() ? a[i] : std::numeric_limits<long long>::max();
    long long bv = i < b.size() ? b[i] : std::numeric_limits<long long>::max();
    if (av != bv) return av < bv;
  }
  return false;
}

}  // namespace

bool rdf_less(const RomanDominatingFunction& a, const RomanDominatingFunction& b) {
  if (a.v2 != b.v2) return less_absent_infinity(a.v2, b.v2);
  return less_absent_infinity(a.v1, b.v1);
}

MinRdfResult min_roman_domination(const Graph& g) {
  SearchContext ctx(g);
  MinRdfResult result;
  result.gamma_r = solve_gamma_r(ctx);
  RomanSearch phase2(ctx, result.gamma_r);
  phase2.enumerate = true;
  phase2.max_collect = 1;
  phase2.dfs(0, 0, 0);
  result.canonical = rdf_from_mask(ctx, phase2.found.at(0));
  return result;
}

EnumerateResult enumerate_min_rdfs(const Graph& g, int cap) {
  if (cap < 1) throw std::invalid_argument("enumeration cap must be positive");
  SearchContext ctx(g);
  RomanSearch phase2(ctx, solve_gamma_r(ctx));
  phase2.enumerate = true;
  phase2.max_collect = cap + 1;  // one extra leaf detects truncation
  phase2.dfs(0, 0, 0);
  EnumerateResult result;
  result.truncated = static_cast<int>(phase2.found.size()) > cap;
  if (result.truncated) phase2.found.resize(static_cast<size_t>(cap));
  result.rdfs.reserve(phase2.found.size());
  for (std::uint32_t s : phase2.found) result.rdfs.push_back(rdf_from_mask(ctx, s));
  return result;
}

MinRdfResult brute_force_min_rdf(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxBruteVertices)
    throw std::length_error("exhaustive labeling limited to 12 vertices, got " + std::to_string(n));
  std::vector<int> label(n, 0);
  MinRdfResult result;
  result.gamma_r = std::numeric_limits<int>::max();
  bool have = false;
  while (true) {
    int weight = 0;
    for (int v = 0; v < n; ++v) weight += label[v];
    bool valid = true;
    for (int v = 0; v < n && valid; ++v) {
      if (label[v] != 0) continue;
      bool guarded = false;
      for (int u : g.neighbors(v))
        if (label[u] == 2) {
          guarded = true;
          break;
        }
      valid = guarded;
    }
    if (valid && weight <= result.gamma_r) {
      RomanDominatingFunction f;
      for (int v = 0; v < n; ++v)
        (label[v] == 0 ? f.v0 : label[v] == 1 ? f.v1 : f.v2).push_back(v);
      if (weight < result.gamma_r || !have || rdf_less(f, result.canonical)) {
        result.gamma_r = weight;
        result.canonical = std::move(f);
        have = true;
      }
    }
    int i = 0;
    while (i < n && label[i] == 2) label[i++] = 0;
    if (i == n) break;
    ++label[i];
  }
  return result;
}

namespace {

struct DominationSearch {
  const SearchContext& ctx;
  int max_cover;  // largest closed neighborhood size
  int best;
  bool enumerate = false;
  std::uint32_t witness = 0;
  bool found = false;

  DominationSearch(const SearchContext& c, int initial_best) : ctx(c), best(initial_best) {
    max_cover = 1;
    for (std::uint32_t nb : ctx.closed_nb) max_cover = std::max(max_cover, std::popcount(nb));
  }

  bool dfs(int idx, std::uint32_t s, std::uint32_t dominated) {
    if (ctx.forced_undominated(s, dominated, idx) > 0) return false;
    int undominated = std::popcount(ctx.full & ~dominated);
    int lb = std::popcount(s) + (undominated + max_cover - 1) / max_cover;
    if (enumerate ? lb > best : lb >= best) return false;
    if (idx == ctx.n) {
      if (undominated > 0) return false;
      int size = std::popcount(s);
      if (enumerate) {
        if (size == best) {
          witness = s;
          found = true;
          return true;
        }
      } else if (size < best) {
        best = size;
      }
      return false;
    }
    if (dfs(idx + 1, s | (1u << idx), dominated | ctx.closed_nb[idx])) return true;
    return dfs(idx + 1, s, dominated);
  }
};

}  // namespace

MinDominationResult min_domination(const Graph& g) {
  SearchContext ctx(g);
  MinDominationResult result;
  if (ctx.n == 0) return result;

  std::uint32_t s = 0, dominated = 0;
  int greedy = 0;
  while (dominated != ctx.full) {
    int best_v = -1, best_gain = 0;
    for (int v = 0; v < ctx.n; ++v) {
      int gain = std::popcount(ctx.closed_nb[v] & ~dominated);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    s |= 1u << best_v;
    dominated |= ctx.closed_nb[best_v];
    ++greedy;
  }

  DominationSearch phase1(ctx, greedy + 1);
  phase1.dfs(0, 0, 0);
  result.gamma = phase1.best;
  DominationSearch phase2(ctx, result.gamma);
  phase2.enumerate = true;
  phase2.dfs(0, 0, 0);
  result.witness = bits_of(phase2.witness);
  return result;
}

SandwichReport check_sandwich(const Graph& g) {
  SandwichReport report;
  report.gamma = min_domination(g).gamma;
  report.gamma_r = min_roman_domination(g).gamma_r;
  report.holds = report.gamma <= report.gamma_r && report.gamma_r <= 2 * report.gamma;
  return report;
}

}  // namespace mrdd
