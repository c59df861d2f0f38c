#pragma once

#include <random>
#include <utility>
#include <vector>

#include "mrdd/graph.hpp"

namespace testutil {

// The 9-vertex worked example used across the suites: a hub joined to
// five branches, two of which end in pendant paths.
inline mrdd::Graph example9() {
  return mrdd::Graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {1, 2}, {3, 4}, {5, 6}, {7, 8}});
}

// Independent distance oracle for cross-checking the BFS implementation.
inline std::vector<std::vector<long long>> floyd_warshall(const mrdd::Graph& g) {
  const int n = g.num_vertices();
  const long long inf = 1LL << 40;
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::uint32_t bounded(std::mt19937& rng, std::uint32_t span) {
  const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() / span * span;
  std::uint32_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % span;
}

inline mrdd::Graph random_graph(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1u) edges.emplace_back(i, j);
  return mrdd::Graph(n, std::move(edges));
}

inline mrdd::Graph random_connected_graph(std::mt19937& rng, int n_min, int n_max) {
  while (true) {
    const int n = n_min + static_cast<int>(bounded(rng, static_cast<std::uint32_t>(n_max - n_min + 1)));
    mrdd::Graph g = random_graph(rng, n);
    if (mrdd::is_connected(g)) return g;
  }
}

// Shifts h's vertices past g's and concatenates the edge lists.
inline mrdd::Graph disjoint_union(const mrdd::Graph& g, const mrdd::Graph& h) {
  const int offset = g.num_vertices();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  return mrdd::Graph(offset + h.num_vertices(), std::move(edges));
}

}  // namespace testutil
