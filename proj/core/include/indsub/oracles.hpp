#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indsub/bits.hpp"
#include "indsub/graph.hpp"

namespace indsub {

// Upper bound on elementary steps an enumeration may take before it gives up
// with ResourceError. Naive enumerations check their estimate up front; the
// pruned searches count search-tree nodes as they go.
struct WorkBudget {
  std::uint64_t max_steps = kDefaultSteps;

  static constexpr std::uint64_t kDefaultSteps = 1'000'000'000ULL;

  // Default budget, overridden by the INDSUB_WORK_BUDGET environment variable.
  static WorkBudget from_environment();
};

std::size_t induced_edge_count(const Graph& g, const VertexSubset& s);

// C_k is the only connected 2-regular graph on k vertices.
bool is_induced_cycle(const Graph& g, const VertexSubset& s, std::size_t k);

// The diamond is the only graph on 4 vertices with 5 edges.
bool is_induced_diamond(const Graph& g, const VertexSubset& s);

// Pruned search: grows chordless paths from their smallest vertex and closes
// them into cycles. Result is sorted.
std::vector<VertexSubset> list_induced_cycles(const Graph& g, std::size_t k,
                                              WorkBudget budget = WorkBudget::from_environment());

// First induced C_k found by the pruned search, if any.
std::optional<VertexSubset> find_induced_cycle(const Graph& g, std::size_t k,
                                               WorkBudget budget = WorkBudget::from_environment());

// Every k-subset, checked with is_induced_cycle. For tiny graphs only.
std::vector<VertexSubset> list_induced_cycles_naive(
    const Graph& g, std::size_t k, WorkBudget budget = WorkBudget::from_environment());

// Pruned: each diamond has exactly one edge between its two degree-3
// vertices; enumerate that edge, then nonadjacent pairs of common neighbours.
std::vector<VertexSubset> list_induced_diamonds(const Graph& g,
                                                WorkBudget budget = WorkBudget::from_environment());

std::vector<VertexSubset> list_induced_diamonds_naive(
    const Graph& g, WorkBudget budget = WorkBudget::from_environment());

// Triangles via sorted common-neighbour intersection.
std::vector<VertexSubset> list_triangles(const Graph& g);

// Eccentricity maximum over all pairs; nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const Graph& g);

// Breadth-first distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

// Set disjointness: 0 iff some index carries 1 in both strings.
int disj(const BitString& x, const BitString& y);

// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace indsub
