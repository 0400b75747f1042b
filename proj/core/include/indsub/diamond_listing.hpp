#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "indsub/congest.hpp"
#include "indsub/decomposition.hpp"
#include "indsub/graph.hpp"

namespace indsub {

// Which step emitted a diamond.
//   sparse  - all five edges in E_s, listed by a degree-2 vertex
//   heavy   - cluster-local listing, diamond contains a C-heavy node
//   cluster - cluster-local listing, no C-heavy node (>= 3 members of C)
//   light   - the L1 / L2 query step
inline constexpr const char* kTagSparse = "sparse";
inline constexpr const char* kTagHeavy = "heavy";
inline constexpr const char* kTagCluster = "cluster";
inline constexpr const char* kTagLight = "light";

struct ListingParams {
  Fraction delta{5, 6};
  Fraction epsilon{1, 2};
  DecompositionParams decomposition;  // its delta is overwritten by `delta`
  SimConfig sim;
  double charge_constant = 1.0;  // c in the cluster simulation charge
};

struct PhaseStats {
  std::string name;
  RunStats run;
  std::size_t listed = 0;
};

struct DiamondListingStats {
  std::vector<PhaseStats> phases;  // membership, sparse, heavy, light (those that ran)
  std::size_t measured_rounds = 0;

  // Cluster-local listing is not simulated message by message; each level
  // that has clusters is charged c * (n^(2-delta-eps) + t * n^(2-2*delta))
  // rounds with t = ceil(sqrt n).
  std::size_t t_rounds = 0;
  double charge_per_cluster = 0.0;
  std::size_t charged_levels = 0;
  double charged_simulation_rounds = 0.0;

  std::size_t heavy_pairs = 0;  // (node, cluster) pairs with the node C-heavy
  std::size_t max_gathered_edges = 0;
  std::uint64_t gathered_cap = 0;  // floor(n^(2-eps))
  std::size_t max_query_list = 0;
  std::uint64_t query_cap = 0;  // floor(n^eps)
  std::size_t query_rounds = 0;

  std::map<std::string, std::size_t> tag_counts;
};

struct DiamondListingResult {
  std::vector<VertexSubset> diamonds;  // sorted, distinct
  std::map<VertexSubset, std::vector<std::string>> tags;
  DiamondListingStats stats;
};

// Single phases against a given decomposition. Each one runs the phases it
// depends on (membership exchange; sparse for light) but reports only its own
// output.
DiamondListingResult sparse_phase(const Graph& g, const Decomposition& dec,
                                  const ListingParams& params = {});
DiamondListingResult heavy_phase(const Graph& g, const Decomposition& dec,
                                 const ListingParams& params = {});
DiamondListingResult light_phase(const Graph& g, const Decomposition& dec,
                                 const ListingParams& params = {});

// All phases on a given decomposition.
DiamondListingResult list_induced_diamonds_congest(const Graph& g, const Decomposition& dec,
                                                   const ListingParams& params = {});
// Decompose, then list.
DiamondListingResult list_induced_diamonds_congest(const Graph& g, const ListingParams& params = {});

}  // namespace indsub
