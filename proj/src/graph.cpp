#include "mrdd/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace mrdd {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::out_of_range("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") with n = " + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

size_t DistanceMatrix::idx(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("index out of range");
  return static_cast<size_t>(i) * n_ + j;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.num_vertices();
  DistanceMatrix d(n);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[v] == DistanceMatrix::kUnreachable) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    for (int t = 0; t < n; ++t) d.at(s, t) = dist[t];
  }
  return d;
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == n;
}

int diameter(const Graph& g) {
  if (g.num_vertices() == 0) throw std::domain_error("diameter of the empty graph");
  if (!is_connected(g)) throw std::domain_error("diameter of a disconnected graph");
  DistanceMatrix d = all_pairs_distances(g);
  int diam = 0;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) diam = std::max(diam, d.at(i, j));
  return diam;
}

long long wiener_index(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("Wiener index of a disconnected graph");
  DistanceMatrix d = all_pairs_distances(g);
  long long w = 0;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) w += d.at(i, j);
  return w;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kComplete: return "complete";
    case Family::kStar: return "star";
    case Family::kBipartite: return "bipartite";
    case Family::kCrown: return "crown";
    case Family::kSpider: return "spider";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
  }
  throw std::invalid_argument("unknown family");
}

namespace {

Graph make_complete(int n) {
  if (n < 1) throw std::out_of_range("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph make_star(int n) {
  if (n < 2) throw std::out_of_range("star graph needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, std::move(e));
}

Graph make_bipartite(int r) {
  if (r < 1) throw std::out_of_range("balanced bipartite graph needs r >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) e.emplace_back(i, r + j);
  return Graph(2 * r, std::move(e));
}

Graph make_crown(int k) {
  if (k < 3) throw std::out_of_range("crown graph needs k >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) e.emplace_back(i, k + j);
  return Graph(2 * k, std::move(e));
}

// Hub 0 joined to spine vertices 1..n-1; spine vertex i carries the
// single foot n-1+i. 2n-1 vertices in total.
Graph make_spider(int n) {
  if (n < 2) throw std::out_of_range("healthy spider needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, n - 1 + i);
  }
  return Graph(2 * n - 1, std::move(e));
}

Graph make_path(int n) {
  if (n < 1) throw std::out_of_range("path graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
  if (n < 3) throw std::out_of_range("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kComplete: return make_complete(spec.param);
    case Family::kStar: return make_star(spec.param);
    case Family::kBipartite: return make_bipartite(spec.param);
    case Family::kCrown: return make_crown(spec.param);
    case Family::kSpider: return make_spider(spec.param);
    case Family::kPath: return make_path(spec.param);
    case Family::kCycle: return make_cycle(spec.param);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace mrdd
