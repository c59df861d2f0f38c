#pragma once

#include <vector>

#include "mrdd/graph.hpp"

namespace mrdd {

/// A Roman dominating function as the label partition (V0, V1, V2):
/// every vertex labeled 0 must have a neighbor labeled 2.
struct RomanDominatingFunction {
  std::vector<int> v0;  // sorted
  std::vector<int> v1;  // sorted
  std::vector<int> v2;  // sorted

  int weight() const noexcept {
    return static_cast<int>(v1.size()) + 2 * static_cast<int>(v2.size());
  }
};

/// True iff (v0, v1, v2) partitions the vertex set and every v0 vertex
/// has a v2 neighbor.
bool is_valid_rdf(const Graph& g, const RomanDominatingFunction& f);

/// Orders RDFs by their sorted v2 lists compared element-wise with
/// absent entries reading as +infinity, then by v1 the same way.
/// Equivalently: the function whose v2 contains min(v2_a XOR v2_b) comes
/// first. This order is stable under disjoint-union index merging, so the
/// canonical minimum of a disconnected graph is the composition of the
/// per-component canonical minima.
bool rdf_less(const RomanDominatingFunction& a, const RomanDominatingFunction& b);

struct MinRdfResult {
  int gamma_r = 0;
  RomanDominatingFunction canonical;  // first minimum in rdf_less order
};

/// Exact Roman domination number and the canonical minimum RDF, by
/// branch and bound over V2 subsets. Throws std::length_error when
/// g has more than 30 vertices.
MinRdfResult min_roman_domination(const Graph& g);

struct EnumerateResult {
  std::vector<RomanDominatingFunction> rdfs;  // in rdf_less order
  bool truncated = false;
};

/// All minimum RDFs, in canonical order, up to cap entries.
/// Throws std::invalid_argument if cap < 1, std::length_error past 30 vertices.
EnumerateResult enumerate_min_rdfs(const Graph& g, int cap = 10000);

/// Reference solver: tries all 3^n labelings. Throws std::length_error
/// when g has more than 12 vertices.
MinRdfResult brute_force_min_rdf(const Graph& g);

struct MinDominationResult {
  int gamma = 0;
  std::vector<int> witness;  // canonical minimum dominating set
};

/// Exact domination number with one witness set. Throws std::length_error
/// past 30 vertices.
MinDominationResult min_domination(const Graph& g);

struct SandwichReport {
  int gamma = 0;
  int gamma_r = 0;
  bool holds = false;  // gamma <= gamma_r <= 2 * gamma
};

SandwichReport check_sandwich(const Graph& g);

}  // namespace mrdd
