#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mrdd {

/// Simple undirected graph on vertices 0..n-1, stored as a normalized
/// edge list (u < v, sorted, duplicate-free) plus sorted adjacency lists.
class Graph {
public:
  Graph() = default;

  /// Throws std::out_of_range if n < 0 or an endpoint is outside [0, n),
  /// std::invalid_argument on self-loops or duplicate edges.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const noexcept { return n_; }
  long long num_edges() const noexcept { return static_cast<long long>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// All-pairs shortest path distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable) {}

  int size() const noexcept { return n_; }
  int at(int i, int j) const { return d_[idx(i, j)]; }
  int& at(int i, int j) { return d_[idx(i, j)]; }
  bool unreachable(int i, int j) const { return at(i, j) == kUnreachable; }

private:
  size_t idx(int i, int j) const;

  int n_ = 0;
  std::vector<int> d_;
};

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Largest finite eccentricity. Throws std::domain_error on disconnected
/// or empty input.
int diameter(const Graph& g);

/// Sum of distances over unordered pairs. Throws std::domain_error on
/// disconnected input.
long long wiener_index(const Graph& g);

/// Parametric graph families.
enum class Family {
  kComplete,   // K_n, n >= 1
  kStar,       // K_{1,n-1} on n >= 2 vertices, hub 0
  kBipartite,  // balanced complete bipartite K_{r,r}, r >= 1; parts 0..r-1, r..2r-1
  kCrown,      // K_{k,k} minus a perfect matching, k >= 3; a_i=i, b_i=k+i, a_i !~ b_i
  kSpider,     // healthy spider S(n,n-1): hub 0, spine 1..n-1, foot n-1+i per spine i
  kPath,       // P_n
  kCycle,      // C_n, n >= 3
};

struct FamilySpec {
  Family family;
  int param;  // n, r, or k depending on the family
};

std::string family_name(Family f);

/// Builds the named family member. Throws std::out_of_range when the
/// parameter is below the family's minimum.
Graph generate(const FamilySpec& spec);

}  // namespace mrdd
