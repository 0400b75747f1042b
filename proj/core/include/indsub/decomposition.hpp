#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

// Exponent p/q. Powers n^(p/q) are compared exactly in integers.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  // "5/6", "1", "0.5". Throws InputError.
  static Fraction parse(std::string_view text);

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// count > n^f, decided exactly.
bool exceeds_power(std::uint64_t count, std::uint64_t n, Fraction f);
// floor(n^f).
std::uint64_t floor_power(std::uint64_t n, Fraction f);

struct DecompositionParams {
  Fraction delta{5, 6};
  // Cluster members need internal degree >= max(2, ceil(n^delta / divisor)).
  std::uint64_t min_degree_divisor = 4;
  // Split components whose sweep conductance falls below the threshold, pushing
  // the cut edges to the next level.
  bool spectral_split = false;
  double split_conductance = 0.1;
  std::uint64_t seed = 0;
};

struct Cluster {
  std::size_t level = 0;  // 1-based
  std::size_t index = 0;  // within its level
  VertexId leader = 0;    // smallest member
  VertexSubset members;
  std::vector<Edge> edges;  // sorted
  // Sweep-cut conductance estimate from a power-iterated Fiedler vector.
  // Advisory only: no mixing-time guarantee is certified.
  double conductance = 0.0;
};

struct Decomposition {
  std::size_t n = 0;
  Fraction delta{5, 6};
  std::size_t min_degree = 2;
  double es_cap = 0.0;  // n^delta * log2 n
  std::size_t max_levels = 1;
  std::size_t level_count = 0;
  std::vector<Cluster> clusters;  // ordered by (level, index)
  std::vector<Edge> edges;        // every edge of the graph, sorted
  std::vector<int> edge_cluster;  // parallel to edges; -1 marks E_s
  std::vector<std::size_t> es_degree;  // |E_{s,v}|

  std::vector<Edge> em_edges() const;
  std::vector<Edge> es_edges() const;
  // Cluster position of an edge, -1 for E_s. Throws InputError for non-edges.
  int cluster_of(Edge e) const;
  bool is_sparse(Edge e) const { return cluster_of(e) < 0; }
  std::size_t max_es_degree() const;
};

std::size_t min_cluster_degree(std::size_t n, const DecompositionParams& params);

// Peels low-degree vertices into E_s, takes connected components of what is
// left as clusters, optionally splitting sparse cuts into later levels.
Decomposition expander_decompose(const Graph& g, const DecompositionParams& params = {});

// Hand-built decomposition: every edge not listed in a cluster goes to E_s.
// `clusters[i]` is the (level, edge set) of cluster i. Throws InputError when
// the clusters overlap in edges, share a vertex within a level, or use
// non-edges; degree and cap conditions are left to the validator.
struct ClusterPart {
  std::size_t level = 1;
  std::vector<Edge> edges;
};
Decomposition decomposition_from_parts(const Graph& g, const DecompositionParams& params,
                                       const std::vector<ClusterPart>& clusters);

// Every broken invariant, as a readable line; empty means valid.
std::vector<std::string> validate_decomposition(const Graph& g, const Decomposition& dec);

}  // namespace indsub
